#include <gtest/gtest.h>

#include "tridyck/partition.hpp"

using namespace tridyck;

TEST(Partition, ParseAndPrint) {
    EXPECT_EQ(Partition::parse("7,6,4,3,1").str(), "7,6,4,3,1");
    EXPECT_EQ(Partition::parse("(4, 2, 1)"), (Partition{4, 2, 1}));
    EXPECT_EQ(Partition::parse("3,1,0,0"), (Partition{3, 1}));
    EXPECT_TRUE(Partition::parse("").empty());
    EXPECT_TRUE(Partition::parse("0").empty());
}

TEST(Partition, RejectsBadInput) {
    EXPECT_THROW(Partition({1, 2}), Error);
    EXPECT_THROW(Partition({3, -1}), Error);
    EXPECT_THROW(Partition::parse("3,x"), Error);
    try {
        Partition({2, 3});
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::invalid_partition);
    }
}

TEST(Partition, Accessors) {
    const Partition p{4, 2, 1};
    EXPECT_EQ(p.size(), 7);
    EXPECT_EQ(p.length(), 3);
    EXPECT_EQ(p[0], 4);
    EXPECT_EQ(p[5], 0);
    EXPECT_TRUE(p.has_cell({1, 1}));
    EXPECT_FALSE(p.has_cell({1, 2}));
    EXPECT_EQ(p.cells().size(), 7u);
}

TEST(Slopes, ArmLegAndCellInterval) {
    const Partition mu{5, 5, 3, 2};
    const Cell c{0, 1};
    EXPECT_EQ(arm(mu, c), 3);
    EXPECT_EQ(leg(mu, c), 3);
    const Cell d{1, 1};
    EXPECT_EQ(arm(mu, d), 3);
    EXPECT_EQ(leg(mu, d), 2);
    auto iv = cell_slope_interval(mu, d);
    EXPECT_EQ(iv.lower, Rational(1, 3));
    EXPECT_EQ(iv.upper, Rational(1, 2));
    EXPECT_THROW(arm(mu, {4, 0}), Error);
}

TEST(Slopes, BoundsAndMean) {
    auto b = slope_bounds(Partition{4, 3, 1});
    EXPECT_EQ(b.lower, Rational(1, 3));
    EXPECT_EQ(b.upper, Rational(1, 2));
    EXPECT_EQ(mean_slope(Partition{3, 2}), Rational(5, 12));
    EXPECT_EQ(mean_slope(Partition{7, 6, 4, 3, 1}), Rational(45, 112));
    EXPECT_EQ(to_string(Rational(5, 12)), "5/12");
}

TEST(Slopes, TriangularExamples) {
    EXPECT_FALSE(is_triangular(Partition{4, 4}));
    EXPECT_TRUE(is_triangular(Partition{4, 3, 1}));
    EXPECT_TRUE(is_triangular(Partition{7, 6, 4, 3, 1}));
    EXPECT_TRUE(is_triangular(Partition{}));
    EXPECT_TRUE(is_triangular(Partition{1}));
    EXPECT_FALSE(is_triangular(Partition{2, 2}));
}

TEST(Slopes, TwoPartCriterionUpTo30) {
    for (int m = 1; m <= 30; ++m)
        for (int n = 0; n <= m; ++n) EXPECT_EQ(is_triangular(Partition{m, n}), n <= (m + 1) / 2) << m << "," << n;
}

TEST(Enumeration, PartitionNumbers) {
    const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n) EXPECT_EQ(static_cast<int>(enumerate_partitions(n).size()), p[n]) << n;
    auto five = enumerate_partitions(5);
    EXPECT_EQ(five.front(), Partition{5});
    EXPECT_EQ(five.back(), (Partition{1, 1, 1, 1, 1}));
}

TEST(Enumeration, TriangularPartitions) {
    auto three = enumerate_triangular_partitions(3);
    ASSERT_EQ(three.size(), 3u);
    EXPECT_EQ(three[0], Partition{3});
    EXPECT_EQ(three[1], (Partition{2, 1}));
    EXPECT_EQ(three[2], (Partition{1, 1, 1}));
    for (int n = 1; n <= 12; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            auto tri = enumerate_triangular_partitions(n);
            EXPECT_EQ(std::find(tri.begin(), tri.end(), p) != tri.end(), is_triangular(p));
        }
}

TEST(Enumeration, SubpartitionsOrderedAndComplete) {
    auto subs = enumerate_subpartitions(Partition{4, 2, 1});
    EXPECT_EQ(subs.size(), 19u);
    EXPECT_TRUE(subs.front().empty());
    EXPECT_EQ(subs.back(), (Partition{4, 2, 1}));
    for (std::size_t k = 1; k < subs.size(); ++k) {
        EXPECT_LE(subs[k - 1].size(), subs[k].size());
        if (subs[k - 1].size() == subs[k].size()) {
            EXPECT_LT(subs[k - 1], subs[k]);
        }
    }
    for (int m = 1; m <= 14; ++m)
        for (int n = 0; n <= (m + 1) / 2; ++n)
            EXPECT_EQ(static_cast<int>(enumerate_subpartitions(Partition{m, n}).size()), (2 * m - n + 2) * (n + 1) / 2);
}

TEST(DyckPath, ValidatesInputs) {
    TriangularDyckPath path(Partition{7, 6, 4, 3, 1}, Partition{5, 5, 3, 2});
    EXPECT_EQ(path.area(), 6);
    EXPECT_THROW(TriangularDyckPath(Partition{4, 4}, Partition{1}), Error);
    EXPECT_THROW(TriangularDyckPath(Partition{3, 1}, Partition{2, 2}), Error);
}
