#include <cmath>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace hgcore;
using hgtest::id;
using hgtest::make;

namespace {

TEST(Sir, ZeroBetaInfectsOnlyTheSeed) {
    auto h = hgtest::triples();
    for (std::uint64_t s = 0; s < 20; ++s) {
        auto r = sir_run(h, 0, 0.0, 100, s);
        EXPECT_EQ(r.spread, 1u);
        EXPECT_EQ(r.infection_time.at(0), 0u);
    }
}

TEST(Sir, FullBetaFollowsHopDistance) {
    auto h = make({{"a", "b"}, {"b", "c", "d"}, {"d", "e"}, {"x", "y"}});
    auto r = sir_run(h, id(h, "a"), 1.0, 100, 42);
    EXPECT_EQ(r.spread, 5u);
    EXPECT_EQ(r.infection_time.at(id(h, "a")), 0u);
    EXPECT_EQ(r.infection_time.at(id(h, "b")), 1u);
    EXPECT_EQ(r.infection_time.at(id(h, "c")), 2u);
    EXPECT_EQ(r.infection_time.at(id(h, "d")), 2u);
    EXPECT_EQ(r.infection_time.at(id(h, "e")), 3u);
    EXPECT_FALSE(r.infection_time.count(id(h, "x")));
}

TEST(Sir, StepCapStopsSpread) {
    auto h = make({{"a", "b"}, {"b", "c"}, {"c", "d"}});
    EXPECT_EQ(sir_run(h, id(h, "a"), 1.0, 2, 1).spread, 3u);
}

TEST(Sir, RejectsBadArguments) {
    auto h = make({{"a", "b"}});
    EXPECT_THROW(sir_run(h, 0, 1.5, 10, 1), std::invalid_argument);
    EXPECT_THROW(sir_run(h, 0, -0.1, 10, 1), std::invalid_argument);
    EXPECT_THROW(sir_run(h, 7, 0.5, 10, 1), std::invalid_argument);
}

TEST(Sir, DeterministicPerSeedAndMonotoneInBeta) {
    auto h = random_hypergraph(30, 40, 2, 4, 3);
    for (std::uint64_t s = 0; s < 50; ++s) {
        EXPECT_EQ(sir_run(h, 0, 0.3, 100, s).infected, sir_run(h, 0, 0.3, 100, s).infected);
        std::size_t last = 0;
        for (double beta : {0.0, 0.1, 0.2, 0.35, 0.5, 0.8, 1.0}) {
            const std::size_t spread = sir_run(h, 0, beta, 100, s).spread;
            EXPECT_GE(spread, last);
            last = spread;
        }
    }
}

TEST(SirOracle, PathExpectation) {
    auto h = make({{"a", "b"}, {"b", "c"}});
    EXPECT_EQ(sir_expected_spread(h, id(h, "a"), make_rational(1, 2)), make_rational(7, 4));
    EXPECT_EQ(sir_expected_spread(h, id(h, "a"), make_rational(0)), make_rational(1));
    EXPECT_EQ(sir_expected_spread(h, id(h, "a"), make_rational(1)), make_rational(3));
}

TEST(SirOracle, GuardOnAttemptCount) {
    auto h = make({{"a", "b", "c", "d", "e", "f"}});  // 30 attempts
    EXPECT_THROW(sir_expected_spread(h, 0, make_rational(1, 2)), GuardError);
}

TEST(SirOracle, MonteCarloAgreesOnTriangle) {
    auto h = make({{"a", "b"}, {"b", "c"}, {"a", "c"}});
    const Rational exact = sir_expected_spread(h, 0, make_rational(1, 3));
    const int runs = 40000;
    double sum = 0, sq = 0;
    for (int r = 0; r < runs; ++r) {
        const double x = static_cast<double>(sir_run(h, 0, 1.0 / 3.0, 100, run_seed(99, r)).spread);
        sum += x;
        sq += x * x;
    }
    const double mean = sum / runs;
    const double se = std::sqrt((sq / runs - mean * mean) / runs);
    EXPECT_NEAR(mean, to_double(exact), 3 * se);
}

TEST(Intervention, DeletesNodesWithTheirEdges) {
    auto t = hgtest::triples();
    auto same = intervention_delete(t, std::vector<NodeId>{0, 1}, 0);
    EXPECT_EQ(same.graph.num_edges(), 3u);

    auto triple = make({{"a", "b", "c"}});
    auto empty = intervention_delete(triple, std::vector<NodeId>{id(triple, "a")}, 1);
    EXPECT_EQ(empty.graph.num_edges(), 0u);
    EXPECT_EQ(empty.report.isolated_nodes.size(), 3u);

    auto r = intervention_delete(t, std::vector<NodeId>{id(t, "e")}, 1);
    ASSERT_EQ(r.graph.num_edges(), 1u);
    std::vector<std::string> members;
    for (NodeId v : r.graph.edge(0)) members.emplace_back(r.graph.label(v));
    EXPECT_EQ(members, (std::vector<std::string>{"a", "c", "d"}));
    EXPECT_EQ(r.report.isolated_nodes, (std::vector<std::string>{"b", "e"}));
}

} // namespace
