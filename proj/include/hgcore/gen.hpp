#ifndef HGCORE_GEN_HPP
#define HGCORE_GEN_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "hgcore/error.hpp"
#include "hgcore/model.hpp"
#include "hgcore/peel.hpp"

namespace hgcore {

namespace detail {

/// Uniform integer in [0, bound) by rejection, independent of the standard
/// library's distribution implementation.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

/// Number of edges with cardinality in [lo, hi] over n nodes, saturating at cap.
inline std::uint64_t distinct_edge_count(std::uint64_t n, std::uint64_t lo, std::uint64_t hi, std::uint64_t cap) {
    std::uint64_t total = 0;
    for (std::uint64_t c = lo; c <= hi; ++c) {
        // C(n, c) computed incrementally, saturating
        unsigned __int128 binom = 1;
        for (std::uint64_t i = 1; i <= c; ++i) {
            binom = binom * (n - c + i) / i;
            if (binom > cap) return cap;
        }
        total += static_cast<std::uint64_t>(binom);
        if (total >= cap) return cap;
    }
    return total;
}

} // namespace detail

/// m distinct hyperedges over labels "0".."n-1": cardinality uniform in
/// [card_min, card_max], members uniform without replacement, duplicates
/// redrawn. Deterministic per seed (mt19937_64). Nodes that land in no edge
/// are absent from the result.
inline Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t card_min, std::size_t card_max,
                                    std::uint64_t seed) {
    if (card_min < 2 || card_min > card_max || card_max > n)
        throw std::invalid_argument("cardinality range must satisfy 2 <= min <= max <= n");
    if (m < 1) throw std::invalid_argument("at least one hyperedge required");
    if (detail::distinct_edge_count(n, card_min, card_max, m) < m)
        throw std::invalid_argument("requested " + std::to_string(m) + " distinct hyperedges, fewer exist");

    std::mt19937_64 rng(seed);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));

    std::unordered_set<std::vector<NodeId>, detail::MemberHash> seen;
    std::vector<std::vector<NodeId>> edges;
    edges.reserve(m);
    std::vector<NodeId> pool(n);
    while (edges.size() < m) {
        const std::size_t card = card_min + detail::uniform_below(rng, card_max - card_min + 1);
        std::iota(pool.begin(), pool.end(), NodeId{0});
        for (std::size_t i = 0; i < card; ++i)
            std::swap(pool[i], pool[i + detail::uniform_below(rng, n - i)]);
        std::vector<NodeId> members(pool.begin(), pool.begin() + card);
        std::sort(members.begin(), members.end());
        if (seen.insert(members).second) edges.push_back(std::move(members));
    }
    return Hypergraph::from_indexed(std::move(labels), std::move(edges)).graph;
}

inline constexpr std::size_t kNaiveOracleNodeLimit = 200;

/// survivors[k-1] is the nbr-k-core node set (ascending ids) for k = 1..max.
struct CoreLevels {
    std::vector<std::vector<NodeId>> survivors;
};

/// Definitional core sets: for each k, repeatedly delete every node with
/// fewer than k neighbors in the strong residual, recomputed from scratch.
inline CoreLevels naive_core_levels(const Hypergraph& h) {
    const std::size_t n = h.num_nodes();
    if (n > kNaiveOracleNodeLimit)
        throw GuardError("naive core oracle limited to " + std::to_string(kNaiveOracleNodeLimit) +
                         " nodes, got " + std::to_string(n));
    CoreLevels out;
    for (std::size_t k = 1;; ++k) {
        std::vector<char> alive(n, 1);
        for (bool changed = true; changed;) {
            changed = false;
            std::vector<char> edge_alive(h.num_edges(), 0);
            for (EdgeId e = 0; e < h.num_edges(); ++e) {
                auto members = h.edge(e);
                edge_alive[e] = std::all_of(members.begin(), members.end(), [&](NodeId u) { return alive[u] != 0; });
            }
            std::vector<NodeId> doomed;
            for (NodeId v = 0; v < n; ++v) {
                if (!alive[v]) continue;
                std::vector<NodeId> nbrs;
                for (EdgeId e : h.incident_edges(v))
                    if (edge_alive[e])
                        for (NodeId u : h.edge(e))
                            if (u != v) nbrs.push_back(u);
                std::sort(nbrs.begin(), nbrs.end());
                nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
                if (nbrs.size() < k) doomed.push_back(v);
            }
            for (NodeId v : doomed) alive[v] = 0;
            changed = !doomed.empty();
        }
        std::vector<NodeId> level;
        for (NodeId v = 0; v < n; ++v)
            if (alive[v]) level.push_back(v);
        if (level.empty()) break;
        out.survivors.push_back(std::move(level));
    }
    return out;
}

/// Core numbers from the definitional oracle: the largest k whose core keeps v.
inline CoreAssignment naive_core_oracle(const Hypergraph& h) {
    const auto levels = naive_core_levels(h);
    CoreAssignment out;
    out.core.assign(h.num_nodes(), 0);
    for (std::size_t k = 0; k < levels.survivors.size(); ++k)
        for (NodeId v : levels.survivors[k]) out.core[v] = static_cast<std::uint32_t>(k + 1);
    return out;
}

/// Classical graph core numbers of the clique expansion (every hyperedge
/// replaced by a clique), by min-degree peeling with unit decrements.
inline CoreAssignment clique_graph_core(const Hypergraph& h) {
    const std::size_t n = h.num_nodes();
    CoreAssignment out;
    out.core.assign(n, 0);
    std::vector<std::uint32_t> deg(n);
    for (NodeId v = 0; v < n; ++v) deg[v] = static_cast<std::uint32_t>(h.neighbor_count(v));
    BucketQueue buckets(n, detail::max_neighbor_count(h));
    for (NodeId v = 0; v < n; ++v) buckets.put(v, deg[v]);
    std::vector<char> removed(n, 0);
    for (std::uint32_t k = 0; k < buckets.num_cells(); ++k) {
        while (auto popped = buckets.pop(k)) {
            const NodeId v = *popped;
            out.core[v] = k;
            removed[v] = 1;
            for (NodeId u : h.neighbors(v)) {
                if (removed[u] || deg[u] <= k) continue;
                --deg[u];
                buckets.put(u, deg[u]);
                ++out.cell_updates;
            }
        }
    }
    return out;
}

} // namespace hgcore

#endif // HGCORE_GEN_HPP
