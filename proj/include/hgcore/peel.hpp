#ifndef HGCORE_PEEL_HPP
#define HGCORE_PEEL_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hgcore/model.hpp"

namespace hgcore {

/// Per-node core numbers plus peeling instrumentation.
struct CoreAssignment {
    std::vector<std::uint32_t> core;
    /// Number of full residual neighbor-set computations.
    std::uint64_t neighborhood_recomputations = 0;
    /// Number of times a node changed bucket cell.
    std::uint64_t cell_updates = 0;

    std::uint32_t max_core() const noexcept {
        return core.empty() ? 0 : *std::max_element(core.begin(), core.end());
    }
};

/// Vector of cells B[0..max_key]; a node lives in the cell matching its key.
/// Cells pop their lowest node id first. Superseded entries are discarded
/// lazily on pop.
class BucketQueue {
public:
    static constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

    BucketQueue(std::size_t nodes, std::size_t max_key)
        : cells_(max_key + 1), key_(nodes, kNone), generation_(nodes, 0) {}

    std::size_t num_cells() const noexcept { return cells_.size(); }
    std::uint32_t key(NodeId v) const noexcept { return key_[v]; }
    bool contains(NodeId v) const noexcept { return key_[v] != kNone; }

    /// Places v in cell k (moving it if it is already queued).
    void put(NodeId v, std::uint32_t k) {
        key_[v] = k;
        const std::uint32_t gen = ++generation_[v];
        auto& cell = cells_[k];
        cell.push_back({v, gen});
        std::push_heap(cell.begin(), cell.end(), std::greater<>{});
    }

    /// Removes and returns the lowest-id node whose key is k.
    std::optional<NodeId> pop(std::uint32_t k) {
        auto& cell = cells_[k];
        while (!cell.empty()) {
            std::pop_heap(cell.begin(), cell.end(), std::greater<>{});
            Entry top = cell.back();
            cell.pop_back();
            if (generation_[top.node] == top.generation && key_[top.node] == k) {
                key_[top.node] = kNone;
                return top.node;
            }
        }
        return std::nullopt;
    }

private:
    struct Entry {
        NodeId node;
        std::uint32_t generation;
        friend bool operator>(const Entry& a, const Entry& b) { return a.node > b.node; }
    };

    std::vector<std::vector<Entry>> cells_;
    std::vector<std::uint32_t> key_;
    std::vector<std::uint32_t> generation_;
};

/// max(|e_m(v)| - 1, min_u |N(u)|) where e_m(v) is v's largest incident edge.
/// Never exceeds the core number of v.
inline std::uint32_t local_lower_bound(const Hypergraph& h, NodeId v, std::size_t min_neighbors) {
    std::size_t largest = 0;
    for (EdgeId e : h.incident_edges(v)) largest = std::max(largest, h.edge_size(e));
    const std::size_t from_edge = largest == 0 ? 0 : largest - 1;
    return static_cast<std::uint32_t>(std::max(from_edge, min_neighbors));
}

inline std::uint32_t local_lower_bound(const Hypergraph& h, NodeId v) {
    return local_lower_bound(h, v, h.min_neighbor_count());
}

inline std::vector<std::uint32_t> local_lower_bounds(const Hypergraph& h) {
    const std::size_t min_nbrs = h.min_neighbor_count();
    std::vector<std::uint32_t> lb(h.num_nodes());
    for (NodeId v = 0; v < h.num_nodes(); ++v) lb[v] = local_lower_bound(h, v, min_nbrs);
    return lb;
}

namespace detail {

inline std::size_t max_neighbor_count(const Hypergraph& h) {
    std::size_t best = 0;
    for (NodeId v = 0; v < h.num_nodes(); ++v) best = std::max(best, h.neighbor_count(v));
    return best;
}

} // namespace detail

/// Bucket peeling in increasing order of residual neighborhood size.
inline CoreAssignment peel(const Hypergraph& h) {
    const std::size_t n = h.num_nodes();
    CoreAssignment out;
    out.core.assign(n, 0);
    Residual residual(h);
    BucketQueue buckets(n, detail::max_neighbor_count(h));
    for (NodeId u = 0; u < n; ++u) {
        buckets.put(u, static_cast<std::uint32_t>(h.neighbor_count(u)));
        ++out.neighborhood_recomputations;
    }

    std::vector<NodeId> nbrs;
    for (std::uint32_t k = 0; k < buckets.num_cells(); ++k) {
        while (auto popped = buckets.pop(k)) {
            const NodeId v = *popped;
            out.core[v] = k;
            nbrs = residual.neighbors(v);
            residual.remove(v);
            for (NodeId u : nbrs) {
                const auto count = static_cast<std::uint32_t>(residual.neighbor_count(u));
                ++out.neighborhood_recomputations;
                const std::uint32_t target = std::max(count, k);
                if (target != buckets.key(u)) {
                    buckets.put(u, target);
                    ++out.cell_updates;
                }
            }
        }
    }
    return out;
}

/// Peeling seeded with local lower bounds. A node's residual neighborhood is
/// only computed once k reaches its bound, and neighbors still carrying an
/// unverified bound are not touched when a node is deleted.
inline CoreAssignment e_peel(const Hypergraph& h) {
    const std::size_t n = h.num_nodes();
    CoreAssignment out;
    out.core.assign(n, 0);
    Residual residual(h);
    BucketQueue buckets(n, detail::max_neighbor_count(h));
    std::vector<char> bound_only(n, 1);
    const auto lb = local_lower_bounds(h);
    for (NodeId u = 0; u < n; ++u) buckets.put(u, lb[u]);

    std::vector<NodeId> nbrs;
    for (std::uint32_t k = 0; k < buckets.num_cells(); ++k) {
        while (auto popped = buckets.pop(k)) {
            const NodeId v = *popped;
            if (bound_only[v]) {
                const auto count = static_cast<std::uint32_t>(residual.neighbor_count(v));
                ++out.neighborhood_recomputations;
                bound_only[v] = 0;
                buckets.put(v, std::max(count, k));
                ++out.cell_updates;
                continue;
            }
            out.core[v] = k;
            nbrs = residual.neighbors(v);
            residual.remove(v);
            for (NodeId u : nbrs) {
                if (bound_only[u]) continue;
                const auto count = static_cast<std::uint32_t>(residual.neighbor_count(u));
                ++out.neighborhood_recomputations;
                const std::uint32_t target = std::max(count, k);
                if (target != buckets.key(u)) {
                    buckets.put(u, target);
                    ++out.cell_updates;
                }
            }
        }
    }
    return out;
}

} // namespace hgcore

#endif // HGCORE_PEEL_HPP
