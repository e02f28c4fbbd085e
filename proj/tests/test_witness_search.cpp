#include <hypemb/error.hpp>
#include <hypemb/partial_order.hpp>
#include <hypemb/witness_search.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace hypemb;

namespace {
// Brute force over ordered pairings: x-multisets of q·d and y-multisets of d'
// are enumerated separately, every permutation of the y list is tried, and Φ
// is searched in a box.
auto oracle_feasible(int n, const DegreeTuple & d, const DegreeTuple & target, std::int64_t q_limit) -> bool
{
    auto s = d.total(), sp = target.total();
    for (auto l = s; l <= sp; ++l)
        for (std::int64_t q = 1; q <= q_limit; ++q) {
            if (q * (s - n - 1) > l - n - 1)
                continue;
            IntVector qd;
            for (auto e : d.entries())
                qd.push_back(q * e);
            auto xsets = oracle::vector_partitions(qd, l, n);
            auto ysets = oracle::vector_partitions(target.entries(), l, target.size());
            for (auto & xs : xsets)
                for (auto ys : ysets) {
                    std::sort(ys.begin(), ys.end());
                    do {
                        if (oracle::box_hom(d, target, xs, ys, 2))
                            return true;
                    } while (std::next_permutation(ys.begin(), ys.end()));
                }
        }
    return false;
}
}

TEST(WitnessSearch, Examples)
{
    auto empty = witness_search(2, {1, 1, 1, 1}, {1, 1, 1});
    EXPECT_EQ(empty.status, SearchStatus::Infeasible);
    EXPECT_TRUE(empty.bounds.empty());
    EXPECT_EQ(empty.note, "empty l-range");

    auto id = witness_search(2, {1, 1, 1}, {1, 1, 1});
    ASSERT_EQ(id.status, SearchStatus::Feasible);
    ASSERT_TRUE(id.witness);
    EXPECT_EQ(id.witness->l, 3);
    EXPECT_EQ(id.witness->q, 1);
    EXPECT_TRUE(check_witness(2, {1, 1, 1}, {1, 1, 1}, *id.witness));

    auto gcd = witness_search(2, {3}, {4, 2});
    EXPECT_EQ(gcd.status, SearchStatus::Infeasible);
}

TEST(WitnessSearch, Hypothesis)
{
    EXPECT_THROW(witness_search(3, {1, 1}, {1, 1, 1, 1}), Error);
    EXPECT_THROW(witness_search(2, {1, 1, 1}, {2}), Error);
}

TEST(WitnessSearch, UnboundedQNeverInfeasible)
{
    // Σd = n+1 with more than one component: q is unbounded.
    for (auto & t : tuples_with_sum(4)) {
        auto r = witness_search(2, {2, 1}, t);
        EXPECT_NE(r.status, SearchStatus::Infeasible) << t;
        for (auto & b : r.bounds)
            EXPECT_FALSE(b.exhaustive);
    }
}

TEST(WitnessSearch, GridShape)
{
    SearchBudget budget;
    auto cells = search_grid(2, {3, 2}, {4, 4, 1}, budget);
    // Σd = 5, n+1 = 3: q <= (l-3)/2 for l in [5, 9].
    std::vector<std::pair<std::int64_t, std::int64_t>> expected{{5, 1}, {6, 1}, {7, 1}, {7, 2}, {8, 1}, {8, 2}, {9, 1},
        {9, 2}, {9, 3}};
    ASSERT_EQ(cells.size(), expected.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        EXPECT_EQ(std::make_pair(cells[i].l, cells[i].q), expected[i]);
}

TEST(WitnessSearch, FeasibleWhenOrdered)
{
    // ≤≤ gives a geometric embedding, so a witness must exist.
    for (int n = 1; n <= 3; ++n)
        for (std::int64_t s = n + 2; s <= 6; ++s)
            for (std::int64_t sp = s; sp <= 6; ++sp)
                for (auto & d : tuples_with_sum(s))
                    for (auto & t : tuples_with_sum(sp)) {
                        if (! leqq(d, t).holds)
                            continue;
                        auto r = witness_search(n, d, t);
                        ASSERT_EQ(r.status, SearchStatus::Feasible) << n << ' ' << d << ' ' << t;
                        EXPECT_TRUE(check_witness(n, d, t, *r.witness));
                    }
}

TEST(WitnessSearch, AgreesWithBruteForce)
{
    int compared = 0;
    for (int n = 1; n <= 2; ++n)
        for (std::int64_t s = n + 2; s <= 4; ++s)
            for (std::int64_t sp = s; sp <= 5; ++sp)
                for (auto & d : tuples_with_sum(s))
                    for (auto & t : tuples_with_sum(sp)) {
                        if (d.size() > 2 || t.size() > 2)
                            continue;
                        auto r = witness_search(n, d, t);
                        auto q_limit = (sp - n - 1) / (s - n - 1);
                        auto brute = oracle_feasible(n, d, t, q_limit);
                        if (brute)
                            EXPECT_EQ(r.status, SearchStatus::Feasible) << n << ' ' << d << ' ' << t;
                        if (r.status == SearchStatus::Feasible)
                            EXPECT_TRUE(check_witness(n, d, t, *r.witness));
                        ++compared;
                    }
    EXPECT_GT(compared, 10);
}

TEST(WitnessSearch, CheckerRejectsTampering)
{
    DegreeTuple d{1, 1, 1};
    auto r = witness_search(2, d, d);
    ASSERT_TRUE(r.witness);
    auto w = *r.witness;
    EXPECT_TRUE(check_witness(2, d, d, w));

    auto bad = w;
    bad.ys[0][0] += 1;
    EXPECT_FALSE(check_witness(2, d, d, bad));
    bad = w;
    bad.q = 2;
    EXPECT_FALSE(check_witness(2, d, d, bad));
    bad = w;
    bad.xs[0] = {1, 1, 1};
    EXPECT_FALSE(check_witness(2, d, d, bad));
    bad = w;
    bad.map = IntMatrix(3, 3);
    EXPECT_FALSE(check_witness(2, d, d, bad));
}

TEST(WitnessSearch, ParallelMatchesSerial)
{
    // A small cap keeps the budget-exceeded cells cheap; caps are per cell, so
    // both paths still see identical work.
    SearchBudget serial;
    serial.call_cap = 2'000;
    auto parallel = serial;
    parallel.threads = 4;
    for (int n = 1; n <= 3; ++n)
        for (std::int64_t s = n + 1; s <= 6; ++s)
            for (std::int64_t sp = s; sp <= 7; ++sp)
                for (auto & d : tuples_with_sum(s))
                    for (auto & t : tuples_with_sum(sp)) {
                        auto a = witness_search_serial(n, d, t, serial);
                        auto b = witness_search(n, d, t, parallel);
                        ASSERT_EQ(a.status, b.status);
                        EXPECT_EQ(a.candidates, b.candidates);
                        EXPECT_EQ(a.hom_solves, b.hom_solves);
                        EXPECT_EQ(a.note, b.note);
                        ASSERT_EQ(a.witness.has_value(), b.witness.has_value());
                        if (a.witness) {
                            EXPECT_EQ(a.witness->xs, b.witness->xs);
                            EXPECT_EQ(a.witness->ys, b.witness->ys);
                            EXPECT_EQ(a.witness->map, b.witness->map);
                        }
                    }
}

TEST(WitnessSearch, CallCap)
{
    SearchBudget tiny;
    tiny.call_cap = 1;
    auto r = witness_search(2, {3, 2, 2}, {10, 1});
    auto capped = witness_search(2, {3, 2, 2}, {10, 1}, tiny);
    EXPECT_EQ(r.status, SearchStatus::Infeasible);
    EXPECT_EQ(capped.status, SearchStatus::BudgetExceeded);
}
