#include <gtest/gtest.h>

#include "support.hpp"

using namespace hgcore;
using hgtest::by_label;
using hgtest::make;

namespace {

using Values = std::map<std::string, std::uint32_t>;

// d_k(v) rebuilt from definitional (k,d) fixpoints: largest d keeping v.
std::vector<std::uint32_t> oracle_level(const Hypergraph& h, std::uint32_t k) {
    std::vector<std::uint32_t> out(h.num_nodes(), 0);
    std::vector<NodeId> cur = hgtest::fixpoint_core(h, hgtest::all_nodes(h), k);
    for (std::uint32_t d = 1; !cur.empty(); ++d) {
        cur = hgtest::fixpoint_core(h, cur, k, d);
        for (NodeId v : cur) out[v] = d;
    }
    return out;
}

TEST(KdCore, SingleTriple) {
    auto h = make({{"a", "b", "c"}});
    auto kd = kd_decompose(h);
    EXPECT_EQ(kd.kmax, 2u);
    EXPECT_EQ(kd.d[0], (std::vector<std::uint32_t>{1, 1, 1}));
    EXPECT_EQ(kd.d[1], (std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(KdCore, PairTriangle) {
    auto h = make({{"a", "b"}, {"b", "c"}, {"a", "c"}});
    auto kd = kd_decompose(h);
    EXPECT_EQ(kd.kmax, 2u);
    EXPECT_EQ(by_label(h, kd.d[1]), (Values{{"a", 2}, {"b", 2}, {"c", 2}}));
}

TEST(KdCore, TriplesSecondLevel) {
    // Every node of the 2-core keeps only degree 1 once b (degree 1) is
    // removed: its edge {a,b,e} dies and a, e drop to degree 1 as well.
    auto h = hgtest::triples();
    auto kd = kd_decompose(h);
    EXPECT_EQ(kd.kmax, 2u);
    EXPECT_EQ(kd.d[1], oracle_level(h, 2));
    EXPECT_EQ(by_label(h, kd.d[1]), (Values{{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}, {"e", 1}}));
}

TEST(DegreeCore, Fixtures) {
    auto single = make({{"a", "b", "c"}});
    EXPECT_EQ(degree_core(single).core, (std::vector<std::uint32_t>{1, 1, 1}));

    // c has degree 1, so the 2-degree core would need {a,b} alone, which
    // keeps only the edge {a,b}.
    auto h = make({{"a", "b"}, {"a", "b", "c"}});
    EXPECT_EQ(by_label(h, degree_core(h).core), (Values{{"a", 1}, {"b", 1}, {"c", 1}}));
    EXPECT_EQ(degree_core(h).core, oracle_level(h, 0));
}

class KdRandom : public ::testing::TestWithParam<std::uint64_t> {};

Hypergraph tiny_random(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = 5 + rng() % 11;
    const std::size_t m = 2 + rng() % 25;
    return random_hypergraph(n, m, 2, std::min<std::size_t>(4, n), seed + 1000);
}

TEST_P(KdRandom, EveryLevelMatchesFixpointOracle) {
    auto h = tiny_random(GetParam());
    auto kd = kd_decompose(h);
    const auto core = hgtest::oracle_cores(h);
    EXPECT_EQ(kd.kmax, *std::max_element(core.begin(), core.end()));
    for (std::uint32_t k = 1; k <= kd.kmax; ++k) {
        EXPECT_EQ(kd.d[k - 1], oracle_level(h, k)) << "k=" << k;
        for (NodeId v = 0; v < h.num_nodes(); ++v) EXPECT_EQ(kd.value(k, v) > 0, core[v] >= k);
    }
    EXPECT_EQ(degree_core(h).core, oracle_level(h, 0));
}

TEST_P(KdRandom, LatticeIsAntiMonotone) {
    auto h = tiny_random(GetParam());
    auto kd = kd_decompose(h);
    for (std::uint32_t k = 2; k <= kd.kmax; ++k)
        for (NodeId v = 0; v < h.num_nodes(); ++v) EXPECT_LE(kd.value(k, v), kd.value(k - 1, v));
}

TEST_P(KdRandom, FirstLevelIsDegreeCoreWhenEveryNodeSurvives) {
    auto h = tiny_random(GetParam());
    auto kd = kd_decompose(h);
    ASSERT_GE(kd.kmax, 1u);
    EXPECT_EQ(kd.d[0], degree_core(h).core);
}

TEST_P(KdRandom, NeighborCoreDominatesDegreeCoreOnPairwiseSimpleInputs) {
    auto h = hgtest::linear_random(GetParam(), 8 + GetParam() % 8, 20);
    ASSERT_LE(max_pair_multiplicity(h), 1u);
    const auto nbr = peel(h).core, deg = degree_core(h).core;
    EXPECT_GE(*std::max_element(nbr.begin(), nbr.end()), *std::max_element(deg.begin(), deg.end()));
}

INSTANTIATE_TEST_SUITE_P(Seeds, KdRandom, ::testing::Range<std::uint64_t>(1, 61));

} // namespace
