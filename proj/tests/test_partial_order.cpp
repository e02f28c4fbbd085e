#include <hypemb/error.hpp>
#include <hypemb/partial_order.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hypemb;

TEST(Moves, Apply)
{
    DegreeTuple d{3, 2, 2};
    EXPECT_EQ(apply_move(d, Move::duplicate(1)), DegreeTuple({3, 2, 2, 2}));
    EXPECT_EQ(apply_move(d, Move::combine(0, 1)), DegreeTuple({5, 2}));
    EXPECT_FALSE(apply_move(d, Move::combine(1, 1)));
    EXPECT_FALSE(apply_move(d, Move::combine(0, 3)));
    EXPECT_FALSE(apply_move(d, Move::duplicate(3)));
    EXPECT_EQ(Move::combine(0, 1).to_string(), "combine(0,1)");
    EXPECT_EQ(Move::duplicate(2).to_string(), "duplicate(2)");
}

TEST(Leqq, WorkedExample)
{
    DegreeTuple d{3, 2, 2};
    auto yes = leqq(d, {7, 2}, true);
    ASSERT_TRUE(yes.holds);
    EXPECT_EQ(replay(d, yes.moves), DegreeTuple({7, 2}));
    EXPECT_EQ(yes.moves.size(), 3u);
    ASSERT_TRUE(yes.decomposition);
    EXPECT_TRUE(is_valid_decomposition(d, {7, 2}, *yes.decomposition));

    auto bfs = leqq_bfs(d, {7, 2});
    ASSERT_TRUE(bfs);
    EXPECT_EQ(bfs->size(), 3u);

    EXPECT_FALSE(leqq(d, {10, 1}, true).holds);
    EXPECT_FALSE(leqq_bfs(d, {10, 1}));
}

TEST(Leqq, Trivial)
{
    auto r = leqq({5}, {5}, true);
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(r.moves.empty());
    EXPECT_TRUE(leqq({1, 1, 1}, {1, 1, 1, 1}).holds);
    EXPECT_TRUE(leqq({1}, {1, 1, 1, 1}).holds);
    EXPECT_FALSE(leqq({2}, {3}).holds);
    EXPECT_FALSE(leqq({1, 1, 1, 1}, {1, 1, 1}).holds);
    EXPECT_TRUE(leqq({1, 1, 1}, {3}, true).holds);
    EXPECT_EQ(leqq({5}, {5, 5, 5}, true).moves.size(), 2u);

    auto two = leqq_decomposition({2}, {4, 2});
    ASSERT_TRUE(two);
    EXPECT_EQ(two->rows, (std::vector<IntVector>{{2, 1}}));
}

TEST(Leqq, Decomposition)
{
    DecompositionWitness w{{{1, 0}, {1, 0}, {1, 0}, {0, 1}}};
    EXPECT_FALSE(is_valid_decomposition({3, 2, 2}, {7, 2}, w));
    // 3·(1,0) + 2·(1,0) + 2·(0,1) = (5,2): wrong target.
    DecompositionWitness ok{{{1, 0}, {2, 0}, {0, 1}}};
    EXPECT_TRUE(is_valid_decomposition({3, 2, 2}, {7, 2}, ok));
    DecompositionWitness zero_row{{{1, 0}, {2, 1}, {0, 0}}};
    EXPECT_FALSE(is_valid_decomposition({3, 2, 2}, {7, 2}, zero_row));
    auto moves = moves_from_decomposition({3, 2, 2}, {7, 2}, ok);
    EXPECT_EQ(replay({3, 2, 2}, moves), DegreeTuple({7, 2}));
}

// Both library routes, the plain DFS decomposition oracle and the move-closure
// oracle agree on every pair up to total 7.
TEST(Leqq, MatchesOracles)
{
    int pairs = 0;
    for (std::int64_t s = 1; s <= 7; ++s)
        for (std::int64_t sp = s; sp <= 7; ++sp)
            for (auto & a : oracle::partitions_of(s))
                for (auto & b : oracle::partitions_of(sp)) {
                    DegreeTuple d(a), t(b);
                    auto r = leqq(d, t, true);
                    EXPECT_EQ(r.holds, oracle::decomposition_exists(a, b)) << d << " " << t;
                    EXPECT_EQ(r.holds, oracle::reachable_by_moves(a, b)) << d << " " << t;
                    if (r.holds)
                        EXPECT_EQ(replay(d, r.moves), t);
                    ++pairs;
                }
    EXPECT_GT(pairs, 500);
}

TEST(Leqq, BfsIsShortest)
{
    // A decomposition-built sequence is never shorter than the BFS one.
    for (std::int64_t sp = 2; sp <= 7; ++sp)
        for (auto & b : oracle::partitions_of(sp))
            for (std::int64_t s = 1; s <= sp; ++s)
                for (auto & a : oracle::partitions_of(s)) {
                    DegreeTuple d(a), t(b);
                    auto r = leqq(d, t);
                    if (! r.holds)
                        continue;
                    auto bfs = leqq_bfs(d, t);
                    ASSERT_TRUE(bfs);
                    EXPECT_LE(bfs->size(), r.moves.size());
                    EXPECT_EQ(replay(d, *bfs), t);
                }
}

TEST(Leqq, Properties)
{
    // Reflexive, antisymmetric, transitive on tuples up to total 6.
    std::vector<DegreeTuple> all;
    for (std::int64_t s = 1; s <= 6; ++s)
        for (auto & t : tuples_with_sum(s))
            all.push_back(t);
    auto n = all.size();
    std::vector<char> rel(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            rel[a * n + b] = leqq(all[a], all[b]).holds;
    for (std::size_t a = 0; a < n; ++a) {
        EXPECT_TRUE(rel[a * n + a]);
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && rel[a * n + b])
                EXPECT_FALSE(rel[b * n + a]);
            for (std::size_t c = 0; c < n; ++c)
                if (rel[a * n + b] && rel[b * n + c])
                    EXPECT_TRUE(rel[a * n + c]);
        }
    }
}

TEST(TuplesWithSum, MatchesOracle)
{
    for (std::int64_t s = 1; s <= 10; ++s) {
        auto mine = tuples_with_sum(s);
        auto ref = oracle::partitions_of(s);
        ASSERT_EQ(mine.size(), ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i)
            EXPECT_EQ(mine[i].entries(), ref[i]);
    }
}

TEST(Surfaces, Criterion)
{
    EXPECT_TRUE(surface_embeds(0, 1, 0, 1));
    EXPECT_TRUE(surface_embeds(0, 1, 0, 2));
    EXPECT_FALSE(surface_embeds(0, 2, 0, 1));
    EXPECT_TRUE(surface_embeds(0, 2, 1, 3));
    EXPECT_FALSE(surface_embeds(1, 1, 0, 3));
    EXPECT_THROW(surface_embeds(-1, 1, 0, 1), Error);
    EXPECT_THROW(surface_embeds(0, 0, 0, 1), Error);
}
