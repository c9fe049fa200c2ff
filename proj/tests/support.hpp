#ifndef HGCORE_TESTS_SUPPORT_HPP
#define HGCORE_TESTS_SUPPORT_HPP

// Fixtures and slow definitional oracles shared by the test binaries. The
// oracles here work on plain node sets and strong induced views only, so
// they share no code path with the algorithms under test.

#include <algorithm>
#include <iterator>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "hgcore/hgcore.hpp"

namespace hgtest {

using hgcore::EdgeId;
using hgcore::Hypergraph;
using hgcore::NodeId;

inline Hypergraph make(const std::vector<std::vector<std::string>>& edges) {
    return hgcore::build(edges).graph;
}

/// {a,b,e},{a,c,d},{c,d,e}: the overlapping-triples fixture where the naive
/// graph h-index overshoots.
inline Hypergraph triples() { return make({{"a", "b", "e"}, {"a", "c", "d"}, {"c", "d", "e"}}); }

inline NodeId id(const Hypergraph& h, const std::string& label) { return *h.find(label); }

inline std::vector<NodeId> ids(const Hypergraph& h, const std::vector<std::string>& labels) {
    std::vector<NodeId> out;
    for (const auto& l : labels) out.push_back(id(h, l));
    std::sort(out.begin(), out.end());
    return out;
}

/// Values keyed by label, for readable expectations.
inline std::map<std::string, std::uint32_t> by_label(const Hypergraph& h, const std::vector<std::uint32_t>& xs) {
    std::map<std::string, std::uint32_t> out;
    for (NodeId v = 0; v < h.num_nodes(); ++v) out[std::string(h.label(v))] = xs[v];
    return out;
}

/// Largest subset of `start` in which every node has >= min_nbrs neighbors
/// and >= min_deg incident edges, by repeated deletion against fresh views.
inline std::vector<NodeId> fixpoint_core(const Hypergraph& h, std::vector<NodeId> start, std::size_t min_nbrs,
                                         std::size_t min_deg = 0) {
    while (!start.empty()) {
        hgcore::SubhypergraphView view(h, start);
        std::vector<NodeId> keep;
        for (NodeId v : view.nodes())
            if (view.neighbor_count(v) >= min_nbrs && view.degree(v) >= min_deg) keep.push_back(v);
        if (keep.size() == start.size()) break;
        start = std::move(keep);
    }
    return start;
}

inline std::vector<NodeId> all_nodes(const Hypergraph& h) {
    std::vector<NodeId> v(h.num_nodes());
    std::iota(v.begin(), v.end(), NodeId{0});
    return v;
}

/// Core numbers from per-k fixpoints.
inline std::vector<std::uint32_t> oracle_cores(const Hypergraph& h) {
    std::vector<std::uint32_t> core(h.num_nodes(), 0);
    std::vector<NodeId> level = all_nodes(h);
    for (std::uint32_t k = 1;; ++k) {
        level = fixpoint_core(h, level, k);
        if (level.empty()) break;
        for (NodeId v : level) core[v] = k;
    }
    return core;
}

/// Max volume density by enumerating subsets through strong induced views.
inline hgcore::Rational oracle_max_density(const Hypergraph& h) {
    hgcore::Rational best = 0;
    const std::size_t n = h.num_nodes();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<NodeId> s;
        for (NodeId v = 0; v < n; ++v)
            if (mask >> v & 1u) s.push_back(v);
        best = std::max(best, hgcore::volume_density(h, s));
    }
    return best;
}

/// Same hypergraph with node labels interned in a shuffled order and edges
/// listed in a shuffled order. perm[old id] = new id.
struct Permuted {
    Hypergraph graph;
    std::vector<NodeId> perm;
};

inline Permuted permuted(const Hypergraph& h, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<NodeId> order = all_nodes(h);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<EdgeId> edge_order(h.num_edges());
    std::iota(edge_order.begin(), edge_order.end(), EdgeId{0});
    std::shuffle(edge_order.begin(), edge_order.end(), rng);

    std::vector<std::string> labels;
    std::vector<NodeId> perm(h.num_nodes());
    for (NodeId i = 0; i < order.size(); ++i) {
        perm[order[i]] = i;
        labels.emplace_back(h.label(order[i]));
    }
    std::vector<std::vector<NodeId>> edges;
    for (EdgeId e : edge_order) {
        std::vector<NodeId> members;
        for (NodeId v : h.edge(e)) members.push_back(perm[v]);
        std::shuffle(members.begin(), members.end(), rng);
        edges.push_back(std::move(members));
    }
    return {Hypergraph::from_indexed(std::move(labels), std::move(edges)).graph, std::move(perm)};
}

/// Random instance in the equivalence-test family: n <= 30, m <= 60, card 2..5.
inline Hypergraph small_random(std::uint64_t seed) {
    std::mt19937_64 rng(seed * 7919 + 13);
    const std::size_t n = 8 + rng() % 23;
    const std::size_t card_max = std::min<std::size_t>(5, n);
    const std::size_t m = 1 + rng() % 60;
    return hgcore::random_hypergraph(n, m, 2, card_max, seed);
}

/// Random hypergraph in which no two edges share more than one node, so
/// every pair of nodes co-occurs in at most one edge.
inline Hypergraph linear_random(std::uint64_t seed, std::size_t n, std::size_t tries) {
    auto pool = hgcore::random_hypergraph(n, tries, 2, std::min<std::size_t>(4, n), seed);
    std::vector<std::vector<NodeId>> kept;
    for (EdgeId e = 0; e < pool.num_edges(); ++e) {
        std::vector<NodeId> members;
        for (NodeId v : pool.edge(e)) members.push_back(static_cast<NodeId>(std::stoul(std::string(pool.label(v)))));
        std::sort(members.begin(), members.end());
        const bool ok = std::all_of(kept.begin(), kept.end(), [&](const std::vector<NodeId>& other) {
            std::vector<NodeId> common;
            std::set_intersection(members.begin(), members.end(), other.begin(), other.end(),
                                  std::back_inserter(common));
            return common.size() <= 1;
        });
        if (ok) kept.push_back(std::move(members));
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return Hypergraph::from_indexed(std::move(labels), std::move(kept)).graph;
}

} // namespace hgtest

#endif // HGCORE_TESTS_SUPPORT_HPP
