#pragma once

// Slow, independent reference computations used to check the library.
// Nothing here calls into the code under test except for plain data types.

#include <hypemb/domain.hpp>
#include <hypemb/lattice.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using hypemb::DegreeTuple;
using hypemb::Integer;
using hypemb::IntMatrix;
using hypemb::IntVector;

using Multiset = std::vector<std::int64_t>;

inline auto sorted_desc(Multiset m) -> Multiset
{
    std::sort(m.begin(), m.end(), std::greater<>());
    return m;
}

// Closure of {d} under merging two entries or duplicating one, restricted to
// tuples no larger than the target in sum and in max entry.
inline auto reachable_by_moves(const Multiset & start, const Multiset & target) -> bool
{
    auto limit = std::accumulate(target.begin(), target.end(), std::int64_t{0});
    auto top = *std::max_element(target.begin(), target.end());
    std::set<Multiset> seen{sorted_desc(start)};
    std::vector<Multiset> stack{sorted_desc(start)};
    auto goal = sorted_desc(target);
    while (! stack.empty()) {
        auto cur = stack.back();
        stack.pop_back();
        if (cur == goal)
            return true;
        auto total = std::accumulate(cur.begin(), cur.end(), std::int64_t{0});
        std::vector<Multiset> next;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (total + cur[i] <= limit) {
                auto m = cur;
                m.push_back(cur[i]);
                next.push_back(sorted_desc(m));
            }
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                if (cur[i] + cur[j] > top)
                    continue;
                Multiset m;
                for (std::size_t t = 0; t < cur.size(); ++t)
                    if (t != i && t != j)
                        m.push_back(cur[t]);
                m.push_back(cur[i] + cur[j]);
                next.push_back(sorted_desc(m));
            }
        }
        for (auto & m : next)
            if (seen.insert(m).second)
                stack.push_back(m);
    }
    return false;
}

// Σ d_i z_i = d' with every z_i nonzero: each target entry is written as a
// nonnegative combination of source degrees, and every source index must be
// used somewhere. Plain DFS over target entries, no grouping or capping.
inline auto decomposition_exists(const Multiset & d, const Multiset & target) -> bool
{
    auto k = d.size();
    std::function<bool(std::size_t, std::uint32_t)> solve;
    std::map<std::pair<std::size_t, std::uint32_t>, bool> memo;
    solve = [&](std::size_t j, std::uint32_t used) -> bool {
        if (j == target.size())
            return used == (1u << k) - 1;
        auto key = std::make_pair(j, used);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        bool ok = false;
        std::function<void(std::size_t, std::int64_t, std::uint32_t)> split = [&](std::size_t i, std::int64_t rem,
                                                                                  std::uint32_t mask) {
            if (ok)
                return;
            if (i == k) {
                if (rem == 0 && solve(j + 1, mask))
                    ok = true;
                return;
            }
            for (std::int64_t z = 0; z * d[i] <= rem; ++z)
                split(i + 1, rem - z * d[i], z > 0 ? mask | (1u << i) : mask);
        };
        split(0, target[j], used);
        memo[key] = ok;
        return ok;
    };
    return solve(0, 0);
}

// All multisets of `parts` nonzero vectors below target, each with support at
// most max_support, summing to target. Built from an explicit candidate list.
inline auto vector_partitions(const IntVector & target, std::size_t parts, std::size_t max_support)
    -> std::set<std::vector<IntVector>>
{
    std::vector<IntVector> candidates;
    IntVector cur(target.size(), 0);
    std::function<void(std::size_t)> gen = [&](std::size_t c) {
        if (c == target.size()) {
            std::size_t support = 0;
            for (auto x : cur)
                support += x != 0;
            if (support > 0 && support <= max_support)
                candidates.push_back(cur);
            return;
        }
        for (std::int64_t x = 0; x <= target[c]; ++x) {
            cur[c] = x;
            gen(c + 1);
        }
        cur[c] = 0;
    };
    gen(0);

    std::set<std::vector<IntVector>> out;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t, IntVector)> choose = [&](std::size_t from, IntVector rem) {
        if (pick.size() == parts) {
            if (std::all_of(rem.begin(), rem.end(), [](auto x) { return x == 0; })) {
                std::vector<IntVector> ms;
                for (auto p : pick)
                    ms.push_back(candidates[p]);
                std::sort(ms.begin(), ms.end());
                out.insert(ms);
            }
            return;
        }
        for (auto p = from; p < candidates.size(); ++p) {
            bool fits = true;
            for (std::size_t c = 0; c < rem.size(); ++c)
                fits = fits && candidates[p][c] <= rem[c];
            if (! fits)
                continue;
            auto next = rem;
            for (std::size_t c = 0; c < rem.size(); ++c)
                next[c] -= candidates[p][c];
            pick.push_back(p);
            choose(p, next);
            pick.pop_back();
        }
    };
    choose(0, target);
    return out;
}

using SmallMatrix = std::vector<std::vector<std::int64_t>>;

// Some x with |x_j| <= bound and A·x = b.
inline auto box_solution(const SmallMatrix & a, const IntVector & b, std::size_t cols, std::int64_t bound)
    -> std::optional<IntVector>
{
    IntVector x(cols, -bound);
    while (true) {
        bool ok = true;
        for (std::size_t r = 0; r < a.size() && ok; ++r) {
            std::int64_t s = 0;
            for (std::size_t c = 0; c < cols; ++c)
                s += a[r][c] * x[c];
            ok = s == b[r];
        }
        if (ok)
            return x;
        std::size_t c = 0;
        while (c < cols && x[c] == bound)
            x[c++] = -bound;
        if (c == cols)
            return std::nullopt;
        ++x[c];
    }
}

// Fraction-free Gaussian elimination.
inline auto bareiss_rank(SmallMatrix m) -> std::size_t
{
    std::vector<std::vector<Integer>> a;
    for (auto & row : m)
        a.emplace_back(row.begin(), row.end());
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, rank = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t cc = c + 1; cc < cols; ++cc)
                a[r][cc] = (a[rank][c] * a[r][cc] - a[r][c] * a[rank][cc]) / prev;
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

inline auto determinant(std::vector<std::vector<Integer>> m) -> Integer
{
    auto n = m.size();
    if (n == 0)
        return 1;
    Integer det = 0;
    if (n == 1)
        return m[0][0];
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Integer>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Integer> row;
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c)
                    row.push_back(m[r][cc]);
            minor.push_back(row);
        }
        auto term = m[0][c] * determinant(minor);
        det += (c % 2 == 0) ? term : Integer(-term);
    }
    return det;
}

// gcd of all maximal minors of an m×r matrix (m >= r), given as r columns.
// A lattice basis of a saturated sublattice has this equal to 1.
inline auto maximal_minor_gcd(const std::vector<std::vector<Integer>> & columns) -> Integer
{
    auto r = columns.size();
    if (r == 0)
        return 1;
    auto m = columns[0].size();
    Integer g = 0;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> go = [&](std::size_t from) {
        if (pick.size() == r) {
            std::vector<std::vector<Integer>> sq(r, std::vector<Integer>(r));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    sq[i][j] = columns[j][pick[i]];
            auto det = determinant(sq);
            g = boost::multiprecision::gcd(g, det < 0 ? Integer(-det) : det);
            return;
        }
        for (auto i = from; i < m; ++i) {
            pick.push_back(i);
            go(i + 1);
            pick.pop_back();
        }
    };
    go(0);
    return g;
}

inline auto f_invariant(int n, const Multiset & d) -> std::int64_t
{
    std::int64_t g = 0;
    for (auto x : d)
        g = std::gcd(g, x);
    for (std::int64_t i = 1;; ++i)
        if ((i * (n + 1)) % g == 0)
            return i;
}

inline auto factorial(int n) -> std::int64_t
{
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// Does u lie in Z·d?
inline auto in_span(const IntVector & u, const DegreeTuple & d) -> bool
{
    if (u[0] % d[0] != 0)
        return false;
    auto t = u[0] / d[0];
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != t * d[i])
            return false;
    return true;
}

// A k'×k matrix with entries in [-bound, bound] inducing Z^k/(d) -> Z^k'/(d')
// with x_i -> y_i, found by exhaustive search.
inline auto box_hom(const DegreeTuple & d, const DegreeTuple & target, const std::vector<IntVector> & xs,
    const std::vector<IntVector> & ys, std::int64_t bound) -> bool
{
    auto k = d.size(), kp = target.size();
    std::vector<std::int64_t> m(k * kp, -bound);
    auto image = [&](const IntVector & x) {
        IntVector out(kp, 0);
        for (std::size_t r = 0; r < kp; ++r)
            for (std::size_t c = 0; c < k; ++c)
                out[r] += m[r * k + c] * x[c];
        return out;
    };
    while (true) {
        bool ok = in_span(image(d.entries()), target);
        for (std::size_t i = 0; i < xs.size() && ok; ++i) {
            auto u = image(xs[i]);
            for (std::size_t r = 0; r < kp; ++r)
                u[r] -= ys[i][r];
            ok = in_span(u, target);
        }
        if (ok)
            return true;
        std::size_t c = 0;
        while (c < m.size() && m[c] == bound)
            m[c++] = -bound;
        if (c == m.size())
            return false;
        ++m[c];
    }
}

// All canonical tuples with the given sum, generated by recursion on the
// largest part.
inline auto partitions_of(std::int64_t total) -> std::vector<Multiset>
{
    std::vector<Multiset> out;
    Multiset cur;
    std::function<void(std::int64_t, std::int64_t)> go = [&](std::int64_t rem, std::int64_t cap) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (auto p = std::min(rem, cap); p >= 1; --p) {
            cur.push_back(p);
            go(rem - p, p);
            cur.pop_back();
        }
    };
    go(total, total);
    return out;
}

}  // namespace oracle
