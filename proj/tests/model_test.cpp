#include <sstream>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace hgcore;
using hgtest::id;
using hgtest::ids;
using hgtest::make;

namespace {

std::vector<NodeId> nbrs(const Hypergraph& h, NodeId v) {
    auto span = h.neighbors(v);
    return {span.begin(), span.end()};
}

TEST(Build, DuplicateEdgesCollapseAndAreReported) {
    auto r = build({{"a", "b", "c"}, {"c", "b", "a"}});
    EXPECT_EQ(r.graph.num_edges(), 1u);
    ASSERT_EQ(r.report.duplicate_edges.size(), 1u);
    EXPECT_EQ(r.report.duplicate_edges[0].line, 2u);
}

TEST(Build, DroppedSingletonLeavesIsolatedNode) {
    auto r = build({{"a", "b"}, {"c"}}, SingletonPolicy::Drop);
    EXPECT_EQ(r.graph.num_nodes(), 2u);
    EXPECT_EQ(r.graph.num_edges(), 1u);
    EXPECT_EQ(r.report.singleton_edges.size(), 1u);
    EXPECT_EQ(r.report.isolated_nodes, std::vector<std::string>{"c"});
    EXPECT_EQ(r.report.all_labels, (std::vector<std::string>{"a", "b", "c"}));
    EXPECT_FALSE(r.graph.find("c"));
}

TEST(Build, RejectedSingletonNamesItsLine) {
    try {
        build({{"a", "b"}, {"c", "c"}});
        FAIL() << "expected InputError";
    } catch (const InputError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

TEST(Build, EmptyInputAndEmptyEdgeFail) {
    EXPECT_THROW(build(std::vector<std::vector<std::string>>{}), InputError);
    EXPECT_THROW(build({{"a", "b"}, {}}), InputError);
}

TEST(Build, NeighborCountsOnTriples) {
    auto h = hgtest::triples();
    const std::map<std::string, std::size_t> expected{{"a", 4}, {"b", 2}, {"c", 3}, {"d", 3}, {"e", 4}};
    for (const auto& [label, count] : expected) EXPECT_EQ(h.neighbor_count(id(h, label)), count) << label;
}

TEST(Build, LabelOrderIsFirstSeen) {
    auto h = make({{"z", "y"}, {"x", "z"}});
    EXPECT_EQ(h.label(0), "z");
    EXPECT_EQ(h.label(1), "y");
    EXPECT_EQ(h.label(2), "x");
}

TEST(Neighbors, SortedAndSelfExcluded) {
    auto single = make({{"a", "b", "c"}});
    EXPECT_EQ(nbrs(single, id(single, "a")), ids(single, {"b", "c"}));

    auto path = make({{"a", "b"}, {"b", "c"}});
    EXPECT_EQ(nbrs(path, id(path, "b")), ids(path, {"a", "c"}));

    auto h = hgtest::triples();
    EXPECT_EQ(nbrs(h, id(h, "e")), ids(h, {"a", "b", "c", "d"}));
}

TEST(Degree, MultiplicityDoesNotAddNeighbors) {
    auto single = make({{"a", "b", "c"}});
    EXPECT_EQ(single.degree(id(single, "a")), 1u);
    EXPECT_EQ(single.neighbor_count(id(single, "a")), 2u);

    auto h = make({{"a", "b"}, {"a", "b", "c"}});
    EXPECT_EQ(h.degree(id(h, "a")), 2u);
    EXPECT_EQ(h.neighbor_count(id(h, "a")), 2u);

    auto t = hgtest::triples();
    EXPECT_EQ(t.degree(id(t, "e")), 2u);
    EXPECT_EQ(t.neighbor_count(id(t, "e")), 4u);
    EXPECT_EQ(t.incident_edges(id(t, "e")).size(), 2u);
}

TEST(StrongInduced, KeepsOnlyEdgesInsideTheSet) {
    auto h = hgtest::triples();
    auto view = strong_induced(h, ids(h, {"a", "c", "d", "e"}));
    EXPECT_EQ(view.edges().size(), 2u);
    EXPECT_EQ(view.neighbor_count(id(h, "a")), 2u);
    EXPECT_EQ(view.neighbor_count(id(h, "e")), 2u);
    EXPECT_FALSE(view.contains(id(h, "b")));

    auto full = strong_induced(h, hgtest::all_nodes(h));
    EXPECT_EQ(full.edges().size(), h.num_edges());
    for (NodeId v = 0; v < h.num_nodes(); ++v) EXPECT_EQ(full.neighbor_count(v), h.neighbor_count(v));

    auto none = strong_induced(h, {});
    EXPECT_TRUE(none.empty());
    EXPECT_TRUE(none.edges().empty());
}

TEST(Residual, DeletionCanDropCountsByMoreThanOne) {
    auto h = make({{"a", "b", "c"}, {"a", "b", "d"}});
    Residual r(h);
    EXPECT_EQ(r.neighbor_count(id(h, "b")), 3u);
    r.remove(id(h, "a"));
    EXPECT_EQ(r.neighbor_count(id(h, "b")), 0u);
    EXPECT_EQ(r.degree(id(h, "b")), 0u);
}

TEST(Properties, NeighborCountBoundedByIncidentCardinalities) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto h = hgtest::small_random(seed);
        for (NodeId v = 0; v < h.num_nodes(); ++v) {
            std::size_t sum = 0;
            std::vector<NodeId> seen;
            bool disjoint = true;
            for (EdgeId e : h.incident_edges(v)) {
                sum += h.edge_size(e) - 1;
                for (NodeId u : h.edge(e)) {
                    if (u == v) continue;
                    if (std::find(seen.begin(), seen.end(), u) != seen.end()) disjoint = false;
                    seen.push_back(u);
                }
            }
            EXPECT_GE(h.degree(v), 1u);
            EXPECT_GE(h.neighbor_count(v), 1u);
            EXPECT_LE(h.neighbor_count(v), sum);
            EXPECT_EQ(h.neighbor_count(v) == sum, disjoint);
        }
    }
}

TEST(Io, ParseSkipsCommentsAndBlankLines) {
    std::istringstream in("# header\n\na b c\n   \n  # indented comment\nc\td\n");
    auto records = parse_hg(in);
    ASSERT_EQ(records.size(), 2u);
    EXPECT_EQ(records[0].line, 3u);
    EXPECT_EQ(records[1].line, 6u);
    EXPECT_EQ(records[1].members, (std::vector<std::string>{"c", "d"}));
}

TEST(Io, RoundTripPreservesEdgeSets) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto h = hgtest::small_random(seed);
        std::stringstream buf;
        write_hg(buf, h);
        auto back = build(parse_hg(buf)).graph;
        ASSERT_EQ(back.num_edges(), h.num_edges());
        ASSERT_EQ(back.num_nodes(), h.num_nodes());
        for (EdgeId e = 0; e < h.num_edges(); ++e) {
            std::vector<std::string> a, b;
            for (NodeId v : h.edge(e)) a.emplace_back(h.label(v));
            for (NodeId v : back.edge(e)) b.emplace_back(back.label(v));
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            EXPECT_EQ(a, b);
        }
    }
}

TEST(Io, MissingFileIsAnInputError) {
    EXPECT_THROW(load_hg("/nonexistent/file.hg"), InputError);
}

} // namespace
