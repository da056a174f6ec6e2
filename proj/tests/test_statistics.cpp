#include <gtest/gtest.h>

#include "tridyck/aqt.hpp"
#include "tridyck/statistics.hpp"

using namespace tridyck;

TEST(Statistics, BigExampleTriple) {
    const Partition lam{7, 6, 4, 3, 1}, mu{5, 5, 3, 2};
    const auto s = statistics(triangular_tableau(lam), mu);
    EXPECT_EQ(s, (PathStatistics{6, 13, 2}));
    EXPECT_EQ(static_cast<int>(slope_similar_cells(TriangularDyckPath(lam, mu)).size()), 13);
    EXPECT_EQ(mu.size() - static_cast<int>(deficit_cells(triangular_tableau(lam), mu).size()), 13);
}

TEST(Statistics, StaircaseExamples) {
    const Partition lam{3, 2, 1};
    const auto theta = triangular_tableau(lam);
    EXPECT_EQ(statistics(theta, Partition{3, 1, 1}).sim, 4);
    EXPECT_EQ(statistics(theta, Partition{1, 1, 1}).sim, 1);
}

TEST(Statistics, ConservationLaw) {
    for (int n = 1; n <= 9; ++n)
        for (const auto& lam : enumerate_triangular_partitions(n))
            for (const auto& theta : {triangular_tableau(lam), top_down_tableau(lam)})
                for (const auto& mu : enumerate_subpartitions(lam)) {
                    const auto s = statistics(theta, mu);
                    EXPECT_EQ(s.area + s.sim + s.deficit, lam.size());
                    EXPECT_GE(s.sim, 0);
                }
}

TEST(Statistics, DeficitIsNonSimilar) {
    for (int n = 1; n <= 10; ++n)
        for (const auto& lam : enumerate_triangular_partitions(n)) {
            const auto theta = triangular_tableau(lam);
            for (const auto& mu : enumerate_subpartitions(lam)) {
                const auto sim = slope_similar_cells(TriangularDyckPath(lam, mu));
                std::set<Cell> nonsim;
                for (const auto& c : mu.cells())
                    if (!sim.count(c)) nonsim.insert(c);
                EXPECT_EQ(deficit_cells(theta, mu), nonsim) << lam.str() << " / " << mu.str();
            }
        }
}

TEST(Statistics, MeanSimilarPrefixes) {
    const Partition lam{5, 3, 1};
    const auto theta = triangular_tableau(lam);
    for (int k = 0; k <= lam.size(); ++k) EXPECT_TRUE(is_mean_similar(lam, theta.prefix_shape(k)));
    EXPECT_FALSE(is_mean_similar(Partition{2, 1}, Partition{1, 1}));
}

TEST(Statistics, ShapeChecks) {
    const auto theta = triangular_tableau(Partition{3, 1});
    EXPECT_THROW(statistics(theta, Partition{4}), Error);
}

TEST(AqtPolynomial, A32Verbatim) {
    const auto A = a_lambda_polynomial(Partition{3, 2});
    EXPECT_EQ(A, MultiPoly::parse("q^5 + q^4*t + q^3*t^2 + q^2*t^3 + q*t^4 + t^5 + q^3*t + q^2*t^2 + q*t^3", 2));
    EXPECT_EQ(A.term_count(), 9u);
}

TEST(AqtPolynomial, SlopeAndDeficitRoutesAgree) {
    for (int n = 1; n <= 11; ++n)
        for (const auto& lam : enumerate_triangular_partitions(n))
            EXPECT_EQ(a_lambda_polynomial(lam), a_lambda_by_slopes(lam)) << lam.str();
}

TEST(AqtPolynomial, SymmetricAndCountsSubpartitions) {
    for (int n = 1; n <= 11; ++n)
        for (const auto& lam : enumerate_triangular_partitions(n)) {
            const auto A = a_lambda_polynomial(lam);
            EXPECT_TRUE(is_qt_symmetric(A)) << lam.str();
            EXPECT_EQ(A.sum_of_coefficients(), static_cast<Coeff>(enumerate_subpartitions(lam).size()));
        }
}

TEST(AqtPolynomial, NonTriangularRejected) {
    EXPECT_THROW(a_lambda_polynomial(Partition{2, 2}), Error);
}
