#include <hypemb/domain.hpp>
#include <hypemb/error.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace hypemb;

namespace {
auto code_of(auto && f) -> ErrorCode
{
    try {
        f();
    }
    catch (const Error & e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::Parse;
}
}

TEST(DegreeTuple, SortsNonIncreasing)
{
    EXPECT_EQ(DegreeTuple({2, 7}).entries(), (IntVector{7, 2}));
    EXPECT_EQ(DegreeTuple({3, 2, 2}).entries(), (IntVector{3, 2, 2}));
    EXPECT_EQ(DegreeTuple({1}).entries(), (IntVector{1}));
    EXPECT_EQ(DegreeTuple({1, 3, 2}), DegreeTuple({3, 2, 1}));
}

TEST(DegreeTuple, RejectsBadInput)
{
    IntVector empty;
    EXPECT_EQ(code_of([&] { canonicalize(empty); }), ErrorCode::EmptyInput);
    EXPECT_EQ(code_of([] { DegreeTuple{3, 0}; }), ErrorCode::NonPositiveEntry);
    EXPECT_EQ(code_of([] { DegreeTuple{-1}; }), ErrorCode::NonPositiveEntry);
}

TEST(DegreeTuple, DerivedQuantities)
{
    DegreeTuple d{4, 6, 2};
    EXPECT_EQ(d.total(), 12);
    EXPECT_EQ(d.gcd(), 2);
    EXPECT_EQ(d.max(), 6);
    EXPECT_EQ(d.min(), 2);
    EXPECT_FALSE(d.all_ones());
    EXPECT_TRUE(DegreeTuple({1, 1, 1}).all_ones());
    EXPECT_EQ(d.to_string(), "(6,4,2)");
}

TEST(DivisorComplement, MainRange)
{
    EXPECT_TRUE(DivisorComplement(2, {1, 1, 1}).in_main_range());
    EXPECT_FALSE(DivisorComplement(3, {1, 1}).in_main_range());
    EXPECT_THROW(DivisorComplement(0, {1}), Error);
}

TEST(Homology, Reduce)
{
    DegreeTuple d{3, 2};
    EXPECT_EQ(homology_reduce({3, 2}, d).representative(), (IntVector{0, 0}));
    EXPECT_TRUE(homology_reduce({6, 4}, d).is_zero());
    EXPECT_EQ(homology_reduce({1, 0}, d), homology_reduce({4, 2}, d));
    EXPECT_EQ(homology_reduce({1, 0}, d), homology_reduce({-2, -2}, d));
    EXPECT_NE(homology_reduce({1, 0}, d), homology_reduce({0, 1}, d));
    EXPECT_EQ(code_of([&] { homology_reduce({1}, d); }), ErrorCode::LengthMismatch);
}

TEST(Homology, EqualIffDifferenceInSpan)
{
    DegreeTuple d{4, 2, 1};
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> coord(-9, 9), shift(-4, 4);
    for (int trial = 0; trial < 2000; ++trial) {
        IntVector a(3), b(3);
        for (auto & x : a)
            x = coord(rng);
        auto t = shift(rng);
        for (std::size_t i = 0; i < 3; ++i)
            b[i] = a[i] + t * d[i];
        auto ha = homology_reduce(a, d);
        EXPECT_EQ(ha, homology_reduce(b, d));
        auto & rep = ha.representative();
        EXPECT_GE(rep[2], 0);
        EXPECT_LT(rep[2], d[2]);
        b[trial % 3] += 1;
        EXPECT_NE(ha, homology_reduce(b, d));
    }
}

TEST(Homology, NullhomologousSum)
{
    DegreeTuple d{3, 2, 2};
    std::vector<IntVector> vs{{1, 0, 0}, {2, 2, 0}, {0, 0, 2}};
    EXPECT_EQ(is_nullhomologous_sum(vs, d), 1);
    vs.push_back({3, 2, 2});
    EXPECT_EQ(is_nullhomologous_sum(vs, d), 2);
    vs.push_back({0, 1, 0});
    EXPECT_FALSE(is_nullhomologous_sum(vs, d));
}
