#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "tridyck/aqt.hpp"
#include "tridyck/conjecture.hpp"
#include "tridyck/lattice.hpp"
#include "tridyck/reference.hpp"
#include "tridyck/schur.hpp"
#include "tridyck/simsym.hpp"
#include "tridyck/verify.hpp"

using namespace tridyck;

TEST(Reference, ChecksumPinned) {
    EXPECT_EQ(reference_checksum(), 0x79c530121e31d390ULL);
    EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Reference, Lookup) {
    const auto e = reference_expansion(Partition{5, 3, 1});
    ASSERT_TRUE(e);
    EXPECT_EQ(e->expansion, SchurExpansion::parse("2,2,1 | 4,1,1 | 4,2 | 5,2 | 6,1 | 7,1 | 9"));
    EXPECT_FALSE(e->uncertain);
    const auto f = reference_expansion(Partition{6, 4, 2, 1});
    ASSERT_TRUE(f);
    EXPECT_EQ(f->expansion.coefficient(Partition{3, 2, 2}), 1);
    EXPECT_TRUE(f->uncertain);
    const auto g = reference_expansion(Partition{7, 5, 3, 1});
    ASSERT_TRUE(g);
    EXPECT_TRUE(g->uncertain);
    for (const auto& nu : {Partition{6, 2, 2}, Partition{5, 2, 2}, Partition{4, 2, 2}})
        EXPECT_EQ(g->expansion.coefficient(nu), 1);
    EXPECT_FALSE(reference_expansion(Partition{99}));
}

TEST(Reference, TableShape) {
    const auto& t = reference_table();
    EXPECT_EQ(t.size(), 22u);
    for (std::size_t k = 0; k < t.size(); ++k) {
        EXPECT_TRUE(is_triangular(t[k].shape));
        EXPECT_TRUE(t[k].expansion.is_positive());
        if (k) {
            EXPECT_LT(t[k - 1].shape, t[k].shape);
        }
        EXPECT_EQ(expand_r1(t[k].expansion).sum_of_coefficients(), Lattice(t[k].shape).interval_count())
            << t[k].shape.str();
    }
}

TEST(Reference, TwoRowTruncationMatchesALambda) {
    for (const auto& e : reference_table())
        if (is_sim_sym(top_down_tableau(e.shape))) {
            EXPECT_EQ(e.expansion.truncated(2), decompose_schur_2var(a_lambda_polynomial(e.shape))) << e.shape.str();
        }
}

TEST(Reference, ParseErrors) {
    EXPECT_EQ(parse_reference("# only a comment\n\n").size(), 0u);
    EXPECT_EQ(parse_reference("2,1 : 3 | 1,1\n1 : 1 | 0\n").size(), 2u);
    EXPECT_THROW(parse_reference("2,1 3 | 1,1\n"), Error);
    EXPECT_THROW(parse_reference("2,1 : 3\n2,1 : 3\n"), Error);
    EXPECT_THROW(parse_reference("2,1 : x\n"), Error);
}

TEST(Conjecture, NotApplicable431) {
    const auto r = check_lattice_conjecture(Partition{4, 3, 1});
    EXPECT_FALSE(r.applicable);
    EXPECT_EQ(r.status, Status::not_applicable);
}

TEST(Conjecture, Pass421) {
    const auto r = check_lattice_conjecture(Partition{4, 2, 1});
    EXPECT_TRUE(r.applicable);
    EXPECT_EQ(r.status, Status::pass);
    EXPECT_TRUE(r.symmetric);
    EXPECT_TRUE(r.positive_2var);
    EXPECT_EQ(r.homogenized, "not-symmetric");
    EXPECT_EQ(r.lift.status, LiftResult::Status::found);
    EXPECT_EQ(r.lift.expansion, SchurExpansion::parse("2,1,1 | 3,2 | 4,1 | 5,1 | 7"));
    EXPECT_TRUE(r.reference_match);
    EXPECT_EQ(r.intervals, 113u);
    const auto j = r.to_json();
    EXPECT_EQ(j["status"], "pass");
}

TEST(Conjecture, Staircase321) {
    const auto r = check_lattice_conjecture(Partition{3, 2, 1});
    EXPECT_TRUE(r.applicable);
    EXPECT_EQ(r.status, Status::pass);
    EXPECT_EQ(r.nodes, 14u);
}

TEST(Verify, SuiteNames) {
    EXPECT_EQ(suite_names(), (std::vector<std::string>{"triangularity", "deficit-equals-nonsim", "schur-positivity-qt",
                                                       "2part-closed-form", "2part-simsym", "2part-qtr",
                                                       "conjecture-lattice", "structure-2part"}));
    EXPECT_THROW(run_suite("no-such-suite"), Error);
    try {
        run_suite("no-such-suite");
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::unknown_suite);
    }
}

TEST(Verify, EverySuiteSmallBounds) {
    for (const auto& name : suite_names()) {
        SuiteBounds b;
        b.max_size = 7;
        const auto r = run_suite(name, b);
        EXPECT_TRUE(r.passed()) << name << "\n" << r.table();
        EXPECT_FALSE(r.cases.empty()) << name;
        EXPECT_EQ(r.count(Status::fail), 0) << name;
    }
}

TEST(Verify, SingleShape) {
    SuiteBounds b;
    b.shape = Partition{5, 3, 1};
    const auto r = run_suite("conjecture-lattice", b);
    ASSERT_EQ(r.cases.size(), 1u);
    EXPECT_EQ(r.cases[0].status, Status::pass);
}

TEST(Verify, DeterministicAcrossThreadCounts) {
    SuiteBounds one, many;
    one.max_size = 10;
    one.threads = 1;
    many.max_size = 10;
    many.threads = 4;
    EXPECT_EQ(run_suite("2part-qtr", one).to_json().dump(), run_suite("2part-qtr", many).to_json().dump());
    EXPECT_EQ(run_suite("conjecture-lattice", one).to_json().dump(),
              run_suite("conjecture-lattice", many).to_json().dump());
}

TEST(Verify, GoldenReport) {
    SuiteBounds b;
    b.max_size = 8;
    const auto got = run_suite("2part-qtr", b).to_json().dump(2) + "\n";
    std::ifstream in(TRIDYCK_GOLDEN_DIR "/2part-qtr-8.json");
    ASSERT_TRUE(in) << "missing golden file";
    std::stringstream want;
    want << in.rdbuf();
    EXPECT_EQ(got, want.str());
}

TEST(Verify, ReportJsonShape) {
    SuiteBounds b;
    b.max_size = 5;
    const auto r = run_suite("triangularity", b);
    const auto j = r.to_json();
    EXPECT_EQ(j["suite"], "triangularity");
    EXPECT_FALSE(j.contains("wall_seconds"));
    EXPECT_TRUE(r.to_json(true).contains("wall_seconds"));
    EXPECT_EQ(j["cases"].size(), r.cases.size());
}
