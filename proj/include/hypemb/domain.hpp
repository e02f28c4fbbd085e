#pragma once

#include <hypemb/integer.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace hypemb {

/// An unordered tuple of positive degrees, stored as its unique
/// non-increasing representative.
class DegreeTuple {
public:
    /// Throws Error(EmptyInput) or Error(NonPositiveEntry).
    explicit DegreeTuple(std::span<const std::int64_t> raw);
    DegreeTuple(std::initializer_list<std::int64_t> raw);

    auto entries() const noexcept -> const IntVector & { return _entries; }
    auto size() const noexcept -> std::size_t { return _entries.size(); }
    auto operator[](std::size_t i) const -> std::int64_t { return _entries[i]; }

    auto total() const -> std::int64_t;
    auto gcd() const -> std::int64_t;
    auto min() const -> std::int64_t { return _entries.back(); }
    auto max() const -> std::int64_t { return _entries.front(); }
    auto all_ones() const -> bool { return max() == 1; }

    auto to_string() const -> std::string;

    auto operator<=>(const DegreeTuple &) const = default;
    auto operator==(const DegreeTuple &) const -> bool = default;

private:
    IntVector _entries;
};

auto canonicalize(std::span<const std::int64_t> raw) -> DegreeTuple;

auto operator<<(std::ostream & s, const DegreeTuple & d) -> std::ostream &;

/// The complement of k generic hypersurfaces of the given degrees in CP^n.
struct DivisorComplement {
    DivisorComplement(int n, DegreeTuple degrees);

    int n;
    DegreeTuple degrees;

    /// Total degree is at least n+1.
    auto in_main_range() const -> bool { return degrees.total() >= n + 1; }
};

/// An element of H_1 = Z^k / Z·d, held by its canonical representative:
/// the unique shift of the input whose last coordinate lies in [0, d_k).
class HomologyElement {
public:
    auto representative() const noexcept -> const IntVector & { return _rep; }
    auto modulus() const noexcept -> const DegreeTuple & { return *_modulus; }
    auto is_zero() const -> bool;

    auto operator==(const HomologyElement & other) const -> bool { return _rep == other._rep; }
    auto operator<=>(const HomologyElement & other) const { return _rep <=> other._rep; }

private:
    friend auto homology_reduce(const IntVector & v, const DegreeTuple & d) -> HomologyElement;
    HomologyElement(IntVector rep, const DegreeTuple & modulus);

    IntVector _rep;
    std::optional<DegreeTuple> _modulus;
};

/// Throws Error(LengthMismatch).
auto homology_reduce(const IntVector & v, const DegreeTuple & d) -> HomologyElement;

/// Returns q >= 1 when the vectors sum to exactly q·d.
auto is_nullhomologous_sum(std::span<const IntVector> vs, const DegreeTuple & d) -> std::optional<std::int64_t>;

auto format_vector(const IntVector & v) -> std::string;

}  // namespace hypemb
