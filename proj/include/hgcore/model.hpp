#ifndef HGCORE_MODEL_HPP
#define HGCORE_MODEL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hgcore/error.hpp"

namespace hgcore {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class SingletonPolicy { Reject, Drop };

/// One input hyperedge as read from a source line.
struct EdgeRecord {
    std::vector<std::string> members;
    std::size_t line = 0;
};

struct DroppedEdge {
    std::size_t line = 0;
    std::vector<std::string> members;
};

/// What `build` discarded on the way to a canonical hypergraph.
struct BuildReport {
    std::vector<DroppedEdge> duplicate_edges;
    std::vector<DroppedEdge> singleton_edges;
    /// Labels that appear in no retained hyperedge, in first-seen order.
    std::vector<std::string> isolated_nodes;
    /// Every label seen in the input (retained or not), in first-seen order.
    std::vector<std::string> all_labels;
};

struct BuildResult;

/// Immutable simple hypergraph with CSR incidence and neighbor adjacency.
///
/// Node ids are dense in [0, num_nodes()) and follow first-seen label order.
/// Every node has at least one incident hyperedge and one neighbor.
class Hypergraph {
public:
    Hypergraph() { edge_offsets_.push_back(0); inc_offsets_.push_back(0); nbr_offsets_.push_back(0); }

    /// Canonicalizes `edges` (sort + dedup members, drop repeated edges),
    /// strips nodes left without edges and compacts ids preserving order.
    /// Edges with fewer than two distinct members must already be removed.
    static BuildResult from_indexed(std::vector<std::string> labels,
                                    std::vector<std::vector<NodeId>> edges,
                                    std::vector<std::size_t> lines = {});

    std::size_t num_nodes() const noexcept { return labels_.size(); }
    std::size_t num_edges() const noexcept { return edge_offsets_.size() - 1; }
    bool empty() const noexcept { return labels_.empty(); }

    std::span<const NodeId> edge(EdgeId e) const noexcept {
        return {edge_members_.data() + edge_offsets_[e], edge_members_.data() + edge_offsets_[e + 1]};
    }
    std::size_t edge_size(EdgeId e) const noexcept { return edge_offsets_[e + 1] - edge_offsets_[e]; }

    std::span<const EdgeId> incident_edges(NodeId v) const noexcept {
        return {inc_edges_.data() + inc_offsets_[v], inc_edges_.data() + inc_offsets_[v + 1]};
    }
    std::size_t degree(NodeId v) const noexcept { return inc_offsets_[v + 1] - inc_offsets_[v]; }

    /// Sorted co-members of v over all incident edges, v excluded.
    std::span<const NodeId> neighbors(NodeId v) const noexcept {
        return {nbr_ids_.data() + nbr_offsets_[v], nbr_ids_.data() + nbr_offsets_[v + 1]};
    }
    std::size_t neighbor_count(NodeId v) const noexcept { return nbr_offsets_[v + 1] - nbr_offsets_[v]; }

    const std::string& label(NodeId v) const { return labels_[v]; }
    std::span<const std::string> labels() const noexcept { return labels_; }
    std::optional<NodeId> find(std::string_view label) const {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t max_edge_size() const noexcept {
        std::size_t best = 0;
        for (EdgeId e = 0; e < num_edges(); ++e) best = std::max(best, edge_size(e));
        return best;
    }
    std::size_t min_neighbor_count() const noexcept {
        if (empty()) return 0;
        std::size_t best = neighbor_count(0);
        for (NodeId v = 1; v < num_nodes(); ++v) best = std::min(best, neighbor_count(v));
        return best;
    }
    std::size_t total_neighbor_count() const noexcept { return nbr_ids_.size(); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<std::size_t> edge_offsets_;
    std::vector<NodeId> edge_members_;
    std::vector<std::size_t> inc_offsets_;
    std::vector<EdgeId> inc_edges_;
    std::vector<std::size_t> nbr_offsets_;
    std::vector<NodeId> nbr_ids_;
};

struct BuildResult {
    Hypergraph graph;
    BuildReport report;
};

namespace detail {

struct MemberHash {
    std::size_t operator()(const std::vector<NodeId>& v) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
        for (NodeId x : v) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

inline std::vector<std::string> labels_of(std::span<const NodeId> members, std::span<const std::string> labels) {
    std::vector<std::string> out;
    out.reserve(members.size());
    for (NodeId v : members) out.push_back(labels[v]);
    return out;
}

} // namespace detail

inline BuildResult Hypergraph::from_indexed(std::vector<std::string> labels,
                                            std::vector<std::vector<NodeId>> edges,
                                            std::vector<std::size_t> lines) {
    BuildResult result;
    result.report.all_labels = labels;
    if (lines.size() != edges.size()) {
        lines.resize(edges.size());
        std::iota(lines.begin(), lines.end(), std::size_t{1});
    }

    std::unordered_set<std::vector<NodeId>, detail::MemberHash> seen;
    seen.reserve(edges.size() * 2);
    std::vector<std::vector<NodeId>> kept;
    kept.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto& members = edges[i];
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (members.size() < 2) {
            result.report.singleton_edges.push_back({lines[i], detail::labels_of(members, labels)});
            continue;
        }
        if (!seen.insert(members).second) {
            result.report.duplicate_edges.push_back({lines[i], detail::labels_of(members, labels)});
            continue;
        }
        kept.push_back(std::move(members));
    }

    // Compact ids to nodes that occur in a retained edge.
    constexpr NodeId kDropped = static_cast<NodeId>(-1);
    std::vector<char> used(labels.size(), 0);
    for (const auto& e : kept)
        for (NodeId v : e) used[v] = 1;
    std::vector<NodeId> remap(labels.size(), kDropped);
    Hypergraph& g = result.graph;
    for (std::size_t v = 0; v < labels.size(); ++v) {
        if (used[v]) {
            remap[v] = static_cast<NodeId>(g.labels_.size());
            g.labels_.push_back(labels[v]);
        } else {
            result.report.isolated_nodes.push_back(labels[v]);
        }
    }
    const std::size_t n = g.labels_.size();
    g.index_.reserve(n * 2);
    for (NodeId v = 0; v < n; ++v) g.index_.emplace(g.labels_[v], v);

    g.edge_offsets_.assign(1, 0);
    g.edge_offsets_.reserve(kept.size() + 1);
    std::vector<std::size_t> deg(n, 0);
    for (const auto& e : kept) {
        for (NodeId v : e) {
            NodeId w = remap[v];
            g.edge_members_.push_back(w);
            ++deg[w];
        }
        g.edge_offsets_.push_back(g.edge_members_.size());
    }

    g.inc_offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.inc_offsets_[v + 1] = g.inc_offsets_[v] + deg[v];
    g.inc_edges_.resize(g.inc_offsets_[n]);
    {
        std::vector<std::size_t> fill(g.inc_offsets_.begin(), g.inc_offsets_.end() - 1);
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            for (NodeId v : g.edge(e)) g.inc_edges_[fill[v]++] = e;
    }

    g.nbr_offsets_.assign(1, 0);
    g.nbr_offsets_.reserve(n + 1);
    std::vector<NodeId> mark(n, kDropped);
    std::vector<NodeId> scratch;
    for (NodeId v = 0; v < n; ++v) {
        scratch.clear();
        mark[v] = v;
        for (EdgeId e : g.incident_edges(v)) {
            for (NodeId u : g.edge(e)) {
                if (mark[u] != v) {
                    mark[u] = v;
                    scratch.push_back(u);
                }
            }
        }
        std::sort(scratch.begin(), scratch.end());
        g.nbr_ids_.insert(g.nbr_ids_.end(), scratch.begin(), scratch.end());
        g.nbr_offsets_.push_back(g.nbr_ids_.size());
    }
    return result;
}

/// Interns labels and builds a canonical hypergraph.
///
/// Throws InputError for an empty input, an empty edge, or (under
/// SingletonPolicy::Reject) an edge with fewer than two distinct members.
inline BuildResult build(std::span<const EdgeRecord> records, SingletonPolicy policy = SingletonPolicy::Reject) {
    if (records.empty()) throw InputError("no hyperedges in input");
    std::vector<std::string> labels;
    std::unordered_map<std::string, NodeId> index;
    std::vector<std::vector<NodeId>> edges;
    std::vector<std::size_t> lines;
    edges.reserve(records.size());
    lines.reserve(records.size());
    for (const auto& rec : records) {
        if (rec.members.empty()) throw InputError("empty hyperedge", rec.line);
        std::vector<NodeId> ids;
        ids.reserve(rec.members.size());
        for (const auto& name : rec.members) {
            auto [it, inserted] = index.try_emplace(name, static_cast<NodeId>(labels.size()));
            if (inserted) labels.push_back(name);
            ids.push_back(it->second);
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        if (ids.size() < 2 && policy == SingletonPolicy::Reject)
            throw InputError("singleton hyperedge '" + rec.members.front() + "'", rec.line);
        edges.push_back(std::move(ids));
        lines.push_back(rec.line);
    }
    return Hypergraph::from_indexed(std::move(labels), std::move(edges), std::move(lines));
}

/// Convenience overload: line numbers are the 1-based list positions.
inline BuildResult build(const std::vector<std::vector<std::string>>& edge_lists,
                         SingletonPolicy policy = SingletonPolicy::Reject) {
    std::vector<EdgeRecord> records;
    records.reserve(edge_lists.size());
    for (std::size_t i = 0; i < edge_lists.size(); ++i) records.push_back({edge_lists[i], i + 1});
    return build(std::span<const EdgeRecord>(records), policy);
}

/// Strongly induced subhypergraph H[S]: keeps the edges entirely inside S.
class SubhypergraphView {
public:
    SubhypergraphView(const Hypergraph& parent, std::span<const NodeId> nodes)
        : parent_(&parent), in_set_(parent.num_nodes(), 0) {
        for (NodeId v : nodes) in_set_[v] = 1;
        for (NodeId v = 0; v < parent.num_nodes(); ++v)
            if (in_set_[v]) nodes_.push_back(v);
        for (EdgeId e = 0; e < parent.num_edges(); ++e) {
            auto members = parent.edge(e);
            if (std::all_of(members.begin(), members.end(), [&](NodeId u) { return in_set_[u] != 0; }))
                edges_.push_back(e);
        }
    }

    const Hypergraph& parent() const noexcept { return *parent_; }
    std::span<const NodeId> nodes() const noexcept { return nodes_; }
    std::span<const EdgeId> edges() const noexcept { return edges_; }
    bool contains(NodeId v) const noexcept { return v < in_set_.size() && in_set_[v] != 0; }
    bool empty() const noexcept { return nodes_.empty(); }

    std::vector<EdgeId> incident_edges(NodeId v) const {
        std::vector<EdgeId> out;
        if (!contains(v)) return out;
        for (EdgeId e : parent_->incident_edges(v))
            if (retained(e)) out.push_back(e);
        return out;
    }
    std::size_t degree(NodeId v) const { return incident_edges(v).size(); }

    std::vector<NodeId> neighbors(NodeId v) const {
        std::vector<NodeId> out;
        for (EdgeId e : incident_edges(v))
            for (NodeId u : parent_->edge(e))
                if (u != v) out.push_back(u);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    std::size_t neighbor_count(NodeId v) const { return neighbors(v).size(); }

private:
    bool retained(EdgeId e) const {
        auto members = parent_->edge(e);
        return std::all_of(members.begin(), members.end(), [&](NodeId u) { return in_set_[u] != 0; });
    }

    const Hypergraph* parent_;
    std::vector<char> in_set_;
    std::vector<NodeId> nodes_;
    std::vector<EdgeId> edges_;
};

inline SubhypergraphView strong_induced(const Hypergraph& h, std::span<const NodeId> nodes) {
    return SubhypergraphView(h, nodes);
}

/// Mutable residual of a hypergraph under node deletion, used by the
/// peeling family. An edge is alive while all of its members are alive;
/// neighbor counts are recomputed on demand by scanning alive edges.
class Residual {
public:
    explicit Residual(const Hypergraph& h) : h_(&h) {
        alive_.assign(h.num_nodes(), 1);
        edge_alive_.assign(h.num_edges(), 1);
        alive_degree_.resize(h.num_nodes());
        for (NodeId v = 0; v < h.num_nodes(); ++v) alive_degree_[v] = static_cast<std::uint32_t>(h.degree(v));
        mark_.assign(h.num_nodes(), 0);
    }

    /// Residual restricted to the nodes with keep[v] != 0.
    Residual(const Hypergraph& h, std::span<const char> keep) : h_(&h) {
        alive_.assign(keep.begin(), keep.end());
        edge_alive_.assign(h.num_edges(), 0);
        alive_degree_.assign(h.num_nodes(), 0);
        for (EdgeId e = 0; e < h.num_edges(); ++e) {
            auto members = h.edge(e);
            if (std::all_of(members.begin(), members.end(), [&](NodeId u) { return alive_[u] != 0; })) {
                edge_alive_[e] = 1;
                for (NodeId u : members) ++alive_degree_[u];
            }
        }
        mark_.assign(h.num_nodes(), 0);
    }

    const Hypergraph& graph() const noexcept { return *h_; }
    bool alive(NodeId v) const noexcept { return alive_[v] != 0; }
    bool edge_alive(EdgeId e) const noexcept { return edge_alive_[e] != 0; }
    std::size_t degree(NodeId v) const noexcept { return alive_degree_[v]; }

    /// Calls fn(u) once for each alive neighbor u of v.
    template <typename Fn>
    void for_each_neighbor(NodeId v, Fn&& fn) {
        const std::uint32_t stamp = next_stamp();
        mark_[v] = stamp;
        for (EdgeId e : h_->incident_edges(v)) {
            if (!edge_alive_[e]) continue;
            for (NodeId u : h_->edge(e)) {
                if (mark_[u] != stamp) {
                    mark_[u] = stamp;
                    fn(u);
                }
            }
        }
    }

    std::size_t neighbor_count(NodeId v) {
        std::size_t count = 0;
        for_each_neighbor(v, [&](NodeId) { ++count; });
        return count;
    }

    std::vector<NodeId> neighbors(NodeId v) {
        std::vector<NodeId> out;
        for_each_neighbor(v, [&](NodeId u) { out.push_back(u); });
        return out;
    }

    /// Deletes v and every alive edge containing it.
    void remove(NodeId v) {
        alive_[v] = 0;
        for (EdgeId e : h_->incident_edges(v)) {
            if (!edge_alive_[e]) continue;
            edge_alive_[e] = 0;
            for (NodeId u : h_->edge(e)) --alive_degree_[u];
        }
    }

private:
    std::uint32_t next_stamp() {
        if (++stamp_ == 0) {
            std::fill(mark_.begin(), mark_.end(), 0);
            stamp_ = 1;
        }
        return stamp_;
    }

    const Hypergraph* h_;
    std::vector<char> alive_;
    std::vector<char> edge_alive_;
    std::vector<std::uint32_t> alive_degree_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 0;
};

} // namespace hgcore

#endif // HGCORE_MODEL_HPP
