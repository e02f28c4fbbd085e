#pragma once

#include <hypemb/domain.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace hypemb {

/// Reeb orbit class γ^A_v on the boundary of a divisor complement: v records
/// intersection multiplicities with D_1..D_k, delta = n-1-|A| is the Morse
/// grading of the critical point A.
///
/// Classes only. A stratum of support r carries one orbit per critical point
/// of a Morse function on a (2n-r-1)-manifold, so delta ranges over
/// [r-n, n-1]; how many orbits sit in each grading depends on the Betti
/// numbers of the stratum torus bundle, which this library does not compute.
struct OrbitClass {
    IntVector v;
    int delta;

    auto support() const -> int { return support_size(v); }
    auto morse_index(int n) const -> int { return n - 1 - delta; }

    auto action(const DegreeTuple & d) const -> std::int64_t;
    auto cz() const -> std::int64_t;
    auto homology(const DegreeTuple & d) const -> HomologyElement;

    auto operator==(const OrbitClass &) const -> bool = default;
};

/// Validates and builds a class. Throws Error(InadmissibleOrbit).
auto make_orbit(int n, const IntVector & v, int morse_index) -> OrbitClass;

/// β_i: the class e_i with delta = n-1.
auto beta(int n, std::size_t k, std::size_t i) -> OrbitClass;

/// Wrapping numbers of the divisor components, -d_i.
auto wrapping_numbers(const DegreeTuple & d) -> IntVector;

/// CZ_{τ0}(γ^A_v) = n - 1 - |A| - 2 Σ v_i. Throws Error(InadmissibleOrbit).
auto cz_index(int n, const IntVector & v, int morse_index) -> std::int64_t;

/// CZ with respect to a holomorphic volume form vanishing to order a_i along
/// D_i: n - 1 - |A| - 2 Σ v_i (a_i + 1).
auto cz_index_anticanonical(int n, const IntVector & v, int morse_index, const IntVector & vanishing)
    -> std::int64_t;

/// Fredholm index of a genus-zero punctured curve from the CZ indices of its
/// ends, its relative first Chern number, and an optional tangency order m.
auto fredholm_index(int n, const std::vector<std::int64_t> & positive_cz, const std::vector<std::int64_t> & negative_cz,
    std::int64_t c1, std::optional<int> tangency) -> std::int64_t;

/// Codimension 2n + 2m - 2 of the constraint <<T^m p>>.
auto tangency_codimension(int n, int m) -> std::int64_t;

struct FormalCurveSpec {
    int n;
    DegreeTuple degrees;
    std::vector<OrbitClass> positive_ends;
    std::optional<int> tangency;
    /// Degree of the sphere obtained by capping the ends; c_1^{τ0} = q(n+1).
    std::int64_t q;
};

/// (n-3)(2-l) + Σ CZ + 2q(n+1) - codim, for a curve with l positive ends and
/// no negative ends. Throws Error(InconsistentHomology) unless the ends sum to q·d.
auto curve_index(const FormalCurveSpec & spec) -> std::int64_t;

/// As curve_index, with q read off from the ends.
auto curve_index(int n, const DegreeTuple & d, const std::vector<OrbitClass> & ends, std::optional<int> tangency)
    -> std::int64_t;

/// Admissible classes with action at most action_cap, ordered by action, then
/// v lexicographically, then delta.
auto orbit_spectrum(int n, const DegreeTuple & d, std::int64_t action_cap) -> std::vector<OrbitClass>;

/// gcd(d) / gcd(gcd(d), n+1), the order of c_1 in H^2.
auto f_invariant(int n, const DegreeTuple & d) -> std::int64_t;

/// (n-1)!, the count of lines through a point with maximal tangency.
auto gw_anchor(int n) -> std::int64_t;

/// Σ d_i when Σ d_i >= n+1, else nullopt.
auto g_invariant(int n, const DegreeTuple & d) -> std::optional<std::int64_t>;

}  // namespace hypemb
