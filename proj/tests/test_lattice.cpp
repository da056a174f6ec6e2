#include <gtest/gtest.h>

#include <algorithm>

#include "tridyck/lattice.hpp"
#include "tridyck/schur.hpp"
#include "tridyck/twopart.hpp"

using namespace tridyck;

namespace {

bool has(const std::vector<Partition>& v, const Partition& p) { return std::find(v.begin(), v.end(), p) != v.end(); }

MultiPoly q_specialization(const MultiPoly& p) {
    MultiPoly out(2);
    for (const auto& [e, c] : p.terms()) out.add_term({e[0], 0, 0}, c);
    return out;
}

}  // namespace

TEST(Rotations, Examples73) {
    const Partition lam{7, 3};
    const auto top = cover_rotations(lam, lam);
    EXPECT_EQ(top.size(), 2u);
    EXPECT_TRUE(has(top, Partition{7, 2}));
    EXPECT_TRUE(has(top, Partition{6, 3}));
    EXPECT_TRUE(has(cover_rotations(lam, Partition{6, 3}), Partition{5, 2}));
    EXPECT_TRUE(cover_rotations(lam, Partition{}).empty());
    EXPECT_THROW(cover_rotations(lam, Partition{8}), Error);
}

TEST(Lattice, SmallCardinalities) {
    const Lattice one(Partition{1});
    EXPECT_EQ(one.size(), 2u);
    EXPECT_EQ(one.covers().size(), 1u);
    EXPECT_EQ(one.interval_count(), 3u);
    EXPECT_EQ(Lattice(Partition{3, 1}).interval_count(), 23u);
    EXPECT_EQ(Lattice(Partition{2, 1}).interval_count(), 13u);
    EXPECT_EQ(Lattice(Partition{3, 2, 1}).interval_count(), 68u);
    const Lattice l421(Partition{4, 2, 1});
    EXPECT_EQ(l421.size(), 19u);
    EXPECT_EQ(l421.interval_count(), 113u);
}

TEST(Lattice, LargerCardinalities) {
    EXPECT_EQ(Lattice(Partition{7, 5, 3, 1}).size(), 143u);
    EXPECT_EQ(Lattice(Partition{7, 5, 3, 1}).interval_count(), 3198u);
    const Lattice big(Partition{8, 6, 4, 2, 1});
    EXPECT_EQ(big.size(), 416u);
    EXPECT_EQ(big.interval_count(), 17388u);
}

TEST(Lattice, Invariants) {
    for (int n = 1; n <= 10; ++n)
        for (const auto& lam : enumerate_triangular_partitions(n)) {
            const Lattice L(lam);
            EXPECT_EQ(L.nodes(), enumerate_subpartitions(lam));
            EXPECT_EQ(L.nodes()[L.minimum()], lam);
            EXPECT_TRUE(L.nodes()[L.maximum()].empty());
            EXPECT_TRUE(L.successors(L.maximum()).empty());
            for (const auto& [u, w] : L.covers()) EXPECT_LT(L.nodes()[w].size(), L.nodes()[u].size());
            for (int v = 0; v < static_cast<int>(L.size()); ++v) {
                EXPECT_TRUE(L.precedes(L.minimum(), v));
                EXPECT_TRUE(L.precedes(v, L.maximum()));
                EXPECT_EQ(L.distance(v, v), 0);
            }
            std::size_t count = 0;
            for (const auto& iv : enumerate_intervals(L)) {
                EXPECT_TRUE(L.precedes(iv.lower, iv.upper));
                EXPECT_TRUE(contains(L.nodes()[iv.lower], L.nodes()[iv.upper]));
                ++count;
            }
            EXPECT_EQ(count, L.interval_count());
            EXPECT_EQ(L.distance(L.minimum(), L.maximum()), lam.size());
        }
}

TEST(Lattice, RejectsNonTriangular) { EXPECT_THROW(Lattice(Partition{2, 2}), Error); }

TEST(IntervalPolynomial, TopDown31) {
    const Partition lam{3, 1};
    const auto P = interval_polynomial(lam, top_down_tableau(lam));
    EXPECT_EQ(P, MultiPoly::parse("q^4 + q^3*t + q^2*t^2 + q*t^3 + t^4 + q^3 + 2*q^2*t + 2*q*t^2 + t^3 + 2*q^2 + "
                                  "3*q*t + 2*t^2 + 2*q + 2*t + 1",
                                  2));
    EXPECT_EQ(P.sum_of_coefficients(), 23);
}

TEST(IntervalPolynomial, SingleCell) {
    EXPECT_EQ(interval_polynomial(Partition{1}, StandardTableau::parse("[1]")), MultiPoly::parse("q + t + 1", 2));
}

TEST(IntervalPolynomial, Triangular421NotSymmetric) {
    const Partition lam{4, 2, 1};
    const auto P = interval_polynomial(lam, triangular_tableau(lam));
    EXPECT_EQ(P, MultiPoly::parse(
                     "q^7 + q^6*t + q^5*t^2 + q^4*t^3 + q^3*t^4 + q^2*t^5 + q*t^6 + t^7 + q^6 + 2*q^5*t + 2*q^4*t^2 + "
                     "2*q^3*t^3 + 2*q^2*t^4 + 3*q*t^5 + t^6 + 2*q^5 + 4*q^4*t + 5*q^3*t^2 + 6*q^2*t^3 + 3*q*t^4 + "
                     "2*t^5 + 3*q^4 + 6*q^3*t + 6*q^2*t^2 + 6*q*t^3 + 3*t^4 + 4*q^3 + 8*q^2*t + 8*q*t^2 + 4*t^3 + "
                     "4*q^2 + 7*q*t + 4*t^2 + 3*q + 3*t + 1",
                     2));
    EXPECT_FALSE(is_qt_symmetric(P));
    EXPECT_EQ(P.coefficient({1, 5, 0}), 3);
    EXPECT_EQ(P.coefficient({5, 1, 0}), 2);
}

TEST(IntervalPolynomial, StaircaseSpecialization) {
    const Partition lam{3, 2, 1};
    const auto P = interval_polynomial(lam, top_down_tableau(lam));
    EXPECT_EQ(q_specialization(P), MultiPoly::parse("q^6 + 2*q^5 + 5*q^4 + 10*q^3 + 15*q^2 + 21*q + 14", 2));
    EXPECT_EQ(P, expand_r1(SchurExpansion::parse("6 | 4,1 | 3,1 | 1,1,1")));
}

TEST(IntervalPolynomial, ShapeMismatch) {
    EXPECT_THROW(interval_polynomial(Partition{3, 1}, top_down_tableau(Partition{2, 1})), Error);
}

TEST(Export, DotAndJson) {
    const Lattice L(Partition{2, 1});
    const auto dot = to_dot(L);
    EXPECT_NE(dot.find("digraph"), std::string::npos);
    EXPECT_NE(dot.find("label=\"(2,1)\""), std::string::npos);
    EXPECT_EQ(static_cast<std::size_t>(std::count(dot.begin(), dot.end(), '>')), L.covers().size());
    const auto j = to_json(L);
    EXPECT_EQ(j["nodes"].size(), 5u);
    EXPECT_EQ(j["covers"].size(), L.covers().size());
    EXPECT_EQ(j["base"], nlohmann::json({2, 1}));
}

TEST(TwoPart, Sides) {
    const Partition lam{7, 3};
    EXPECT_EQ(two_part_side(lam, Partition{7, 1}), Side::left);
    EXPECT_EQ(two_part_side(lam, Partition{6, 2}), Side::center);
    EXPECT_EQ(two_part_side(lam, Partition{2, 1}), Side::right);
    int left = 0, center = 0;
    for (const auto& mu : enumerate_subpartitions(lam)) {
        left += two_part_side(lam, mu) == Side::left;
        center += two_part_side(lam, mu) == Side::center;
    }
    EXPECT_EQ(left, 6);
    EXPECT_EQ(center, 4);
    EXPECT_THROW(two_part_side(Partition{3, 2, 1}, Partition{1}), Error);
    try {
        two_part_side(Partition{3, 2, 1}, Partition{1});
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_two_part);
    }
}

TEST(TwoPart, DistanceExamples) {
    const Lattice L(Partition{7, 3});
    EXPECT_EQ(L.distance(L.index_of(Partition{5, 2}), L.index_of(Partition{2, 1})), 3);
    EXPECT_EQ(L.distance(L.index_of(Partition{7, 2}), L.index_of(Partition{3, 1})), 5);
}

TEST(TwoPart, Polygons73) {
    const Partition lam{7, 3};
    const Lattice L(lam);
    int pent = 0, small = 0, big = 0;
    for (int v = 0; v < static_cast<int>(L.size()); ++v) {
        const auto& mu = L.nodes()[v];
        if (!(mu[0] > mu[1] && mu[1] > 0)) continue;
        const auto p = predicted_polygon(lam, mu);
        pent += p.kind == Polygon::Kind::pentagon;
        small += p.kind == Polygon::Kind::small_square;
        big += p.kind == Polygon::Kind::big_square;
        EXPECT_EQ(lattice_polygon(L, v).size(), p.kind == Polygon::Kind::pentagon ? 5u : 4u);
        if (p.kind == Polygon::Kind::small_square) {
            EXPECT_EQ(two_part_side(lam, mu), Side::left);
        }
        if (p.kind == Polygon::Kind::big_square) {
            EXPECT_EQ(two_part_side(lam, mu), Side::right);
        }
    }
    EXPECT_EQ(pent, 3);
    EXPECT_GT(small, 0);
    EXPECT_GT(big, 0);
}

TEST(TwoPart, RedLineExamples) {
    const Partition lam{7, 3};
    EXPECT_EQ(predicted_red_line_polynomial(lam, Partition{6, 1}), (std::vector<int>{0, 1, 1, 1}));
    EXPECT_EQ(predicted_red_line_polynomial(lam, Partition{2, 1}), (std::vector<int>{0, 0, 1, 1, 1, 1, 1, 1}));
}

TEST(TwoPart, StructureChecksUpToM12) {
    for (int m = 1; m <= 12; ++m)
        for (int n = 0; n <= (m + 1) / 2; ++n)
            for (const auto& c : check_structure_2part(m, n)) EXPECT_EQ(c.status, Status::pass) << c.input << " " << c.details;
}

TEST(TwoPart, TopDownIntervals) {
    EXPECT_EQ(check_two_row_intervals(3, 1).status, Status::pass);
    EXPECT_EQ(check_two_row_intervals(7, 3).status, Status::pass);
    EXPECT_EQ(check_two_row_intervals(6, 0).status, Status::pass);
    EXPECT_EQ(interval_polynomial(Partition{5}, top_down_tableau(Partition{5})), chain_interval_polynomial(5));
}

TEST(GeneralShapes, LatticeShapeChecks) {
    for (int n = 1; n <= 12; ++n)
        for (const auto& lam : enumerate_triangular_partitions(n))
            for (const auto& c : check_lattice_shape(Lattice(lam))) EXPECT_EQ(c.status, Status::pass) << c.input << " " << c.details;
}
