#include <hypemb/error.hpp>
#include <hypemb/index_calculus.hpp>

#include <algorithm>
#include <functional>
#include <numeric>

namespace hypemb {

using std::size_t;
using std::vector;

namespace {
    void check_orbit(int n, const IntVector & v, int morse_index)
    {
        if (v.empty() || is_zero(v))
            throw Error(ErrorCode::InadmissibleOrbit, "orbit vector must be nonzero");
        for (auto x : v)
            if (x < 0)
                throw Error(ErrorCode::InadmissibleOrbit, "orbit vector entries must be nonnegative");
        auto r = support_size(v);
        if (r > n)
            throw Error(ErrorCode::InadmissibleOrbit, "stratum with " + std::to_string(r)
                    + " components is empty in dimension " + std::to_string(n));
        if (morse_index < 0 || morse_index > 2 * n - r - 1)
            throw Error(ErrorCode::InadmissibleOrbit, "Morse index " + std::to_string(morse_index)
                    + " out of range for a stratum of support " + std::to_string(r));
    }
}

auto OrbitClass::action(const DegreeTuple & d) const -> std::int64_t
{
    return dot(v, d.entries());
}

auto OrbitClass::cz() const -> std::int64_t
{
    return checked_sub(delta, checked_mul(2, sum(v)));
}

auto OrbitClass::homology(const DegreeTuple & d) const -> HomologyElement
{
    return homology_reduce(v, d);
}

auto make_orbit(int n, const IntVector & v, int morse_index) -> OrbitClass
{
    check_orbit(n, v, morse_index);
    return OrbitClass{v, n - 1 - morse_index};
}

auto beta(int n, size_t k, size_t i) -> OrbitClass
{
    IntVector v(k, 0);
    v.at(i) = 1;
    return make_orbit(n, v, 0);
}

auto wrapping_numbers(const DegreeTuple & d) -> IntVector
{
    IntVector w;
    w.reserve(d.size());
    for (auto e : d.entries())
        w.push_back(-e);
    return w;
}

auto cz_index(int n, const IntVector & v, int morse_index) -> std::int64_t
{
    check_orbit(n, v, morse_index);
    return checked_sub(n - 1 - morse_index, checked_mul(2, sum(v)));
}

auto cz_index_anticanonical(int n, const IntVector & v, int morse_index, const IntVector & vanishing) -> std::int64_t
{
    check_orbit(n, v, morse_index);
    if (vanishing.size() != v.size())
        throw Error(ErrorCode::LengthMismatch, "one vanishing order per divisor component is required");
    std::int64_t weighted = 0;
    for (size_t i = 0; i < v.size(); ++i)
        weighted = checked_add(weighted, checked_mul(v[i], checked_add(vanishing[i], 1)));
    return checked_sub(n - 1 - morse_index, checked_mul(2, weighted));
}

auto tangency_codimension(int n, int m) -> std::int64_t
{
    return 2 * static_cast<std::int64_t>(n) + 2 * static_cast<std::int64_t>(m) - 2;
}

auto fredholm_index(int n, const vector<std::int64_t> & positive_cz, const vector<std::int64_t> & negative_cz,
    std::int64_t c1, std::optional<int> tangency) -> std::int64_t
{
    std::int64_t ends = static_cast<std::int64_t>(positive_cz.size() + negative_cz.size());
    auto ind = checked_mul(n - 3, 2 - ends);
    for (auto cz : positive_cz)
        ind = checked_add(ind, cz);
    for (auto cz : negative_cz)
        ind = checked_sub(ind, cz);
    ind = checked_add(ind, checked_mul(2, c1));
    if (tangency)
        ind = checked_sub(ind, tangency_codimension(n, *tangency));
    return ind;
}

auto curve_index(const FormalCurveSpec & spec) -> std::int64_t
{
    vector<IntVector> vs;
    vector<std::int64_t> czs;
    for (auto & end : spec.positive_ends) {
        vs.push_back(end.v);
        czs.push_back(end.cz());
    }
    auto q = is_nullhomologous_sum(vs, spec.degrees);
    if (! q || *q != spec.q)
        throw Error(ErrorCode::InconsistentHomology, "positive ends do not sum to "
                + std::to_string(spec.q) + "·d");
    auto c1 = checked_mul(spec.q, spec.n + 1);
    return fredholm_index(spec.n, czs, {}, c1, spec.tangency);
}

auto curve_index(int n, const DegreeTuple & d, const vector<OrbitClass> & ends, std::optional<int> tangency)
    -> std::int64_t
{
    vector<IntVector> vs;
    for (auto & end : ends)
        vs.push_back(end.v);
    auto q = is_nullhomologous_sum(vs, d);
    if (! q)
        throw Error(ErrorCode::InconsistentHomology, "positive ends are not null-homologous");
    return curve_index(FormalCurveSpec{n, d, ends, tangency, *q});
}

auto orbit_spectrum(int n, const DegreeTuple & d, std::int64_t action_cap) -> vector<OrbitClass>
{
    vector<OrbitClass> out;
    IntVector v(d.size(), 0);

    std::function<void(size_t, std::int64_t, int)> rec = [&](size_t i, std::int64_t budget, int support) {
        if (i == d.size()) {
            if (support == 0)
                return;
            for (int delta = support - n; delta <= n - 1; ++delta)
                out.push_back(OrbitClass{v, delta});
            return;
        }
        for (std::int64_t x = 0; x * d[i] <= budget; ++x) {
            int s = support + (x > 0);
            if (s > n)
                break;
            v[i] = x;
            rec(i + 1, budget - x * d[i], s);
        }
        v[i] = 0;
    };
    rec(0, action_cap, 0);

    std::sort(out.begin(), out.end(), [&](const OrbitClass & a, const OrbitClass & b) {
        auto aa = a.action(d), ab = b.action(d);
        if (aa != ab)
            return aa < ab;
        if (a.v != b.v)
            return a.v < b.v;
        return a.delta < b.delta;
    });
    return out;
}

auto f_invariant(int n, const DegreeTuple & d) -> std::int64_t
{
    auto g = d.gcd();
    return g / std::gcd(g, static_cast<std::int64_t>(n) + 1);
}

auto gw_anchor(int n) -> std::int64_t
{
    if (n < 1)
        throw Error(ErrorCode::NonPositiveEntry, "dimension must be at least 1");
    std::int64_t f = 1;
    for (int i = 2; i <= n - 1; ++i)
        f = checked_mul(f, i);
    return f;
}

auto g_invariant(int n, const DegreeTuple & d) -> std::optional<std::int64_t>
{
    auto total = d.total();
    if (total < n + 1)
        return std::nullopt;
    return total;
}

}  // namespace hypemb
