#include <hypemb/partitions.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hypemb;

TEST(Partitions, Examples)
{
    EXPECT_EQ(collect_vector_partitions({2, 0}, 2, 1), (std::vector<std::vector<IntVector>>{{{1, 0}, {1, 0}}}));
    EXPECT_EQ(collect_vector_partitions({1, 1}, 2, 2).size(), 1u);
    EXPECT_TRUE(collect_vector_partitions({1, 1}, 3, 2).empty());

    IntVector target{3, 2, 1};
    auto units = collect_vector_partitions(target, 6, 3);
    ASSERT_EQ(units.size(), 1u);
    for (auto & part : units[0])
        EXPECT_EQ(support_size(part), 1);
}

TEST(Partitions, MatchesOracle)
{
    std::vector<IntVector> targets{{3}, {2, 2}, {3, 1}, {2, 1, 1}, {1, 1, 1}, {4, 2}, {2, 2, 1}, {3, 0, 2}};
    for (auto & target : targets)
        for (std::size_t parts = 1; parts <= 6; ++parts)
            for (std::size_t support = 1; support <= target.size(); ++support) {
                auto mine = collect_vector_partitions(target, parts, support);
                std::set<std::vector<IntVector>> as_set(mine.begin(), mine.end());
                EXPECT_EQ(as_set.size(), mine.size()) << "duplicate multiset";
                EXPECT_EQ(as_set, oracle::vector_partitions(target, parts, support));
                EXPECT_TRUE(std::is_sorted(mine.begin(), mine.end()));
                for (auto & ms : mine)
                    EXPECT_TRUE(std::is_sorted(ms.begin(), ms.end()));
            }
}

TEST(Partitions, Blocks)
{
    // Two blocks: x in Z^2 with support <= 1 and entries <= 2, y in Z^1.
    IntVector target{2, 2, 3};
    PartBlock blocks[2] = {{2, 1, 2}, {1}};
    std::set<std::vector<IntVector>> seen;
    enumerate_block_partitions(target, 3, blocks, [&](std::span<const IntVector> parts) {
        std::vector<IntVector> ms(parts.begin(), parts.end());
        EXPECT_TRUE(seen.insert(ms).second);
        return true;
    });
    // Oracle: all 3-part multisets of the joint target, filtered by block rules.
    std::set<std::vector<IntVector>> expected;
    for (auto & ms : oracle::vector_partitions(target, 3, 3)) {
        bool ok = true;
        for (auto & p : ms) {
            auto xs = (p[0] != 0) + (p[1] != 0);
            ok = ok && xs >= 1 && xs <= 1 && p[0] <= 2 && p[1] <= 2 && p[2] >= 1;
        }
        if (ok)
            expected.insert(ms);
    }
    EXPECT_EQ(seen, expected);
}

TEST(Partitions, EarlyStop)
{
    int calls = 0;
    auto finished = enumerate_vector_partitions({4, 4}, 3, 2, [&](auto) { return ++calls < 2; });
    EXPECT_FALSE(finished);
    EXPECT_EQ(calls, 2);
}
