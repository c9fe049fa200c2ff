#ifndef HGCORE_KDCORE_HPP
#define HGCORE_KDCORE_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hgcore/localcore.hpp"
#include "hgcore/model.hpp"
#include "hgcore/peel.hpp"

namespace hgcore {

/// (neighborhood, degree)-core lattice stored per neighborhood level.
///
/// For 1 <= k <= kmax, `d[k-1][v]` is the largest d such that v belongs to
/// the (k,d)-core, or 0 when v is outside the nbr-k-core. The (k,d)-core is
/// therefore {v : d[k-1][v] >= d}.
struct KDCoreResult {
    std::uint32_t kmax = 0;
    std::vector<std::vector<std::uint32_t>> d;

    std::uint32_t value(std::uint32_t k, NodeId v) const { return d[k - 1][v]; }

    std::vector<NodeId> members(std::uint32_t k, std::uint32_t dmin) const {
        std::vector<NodeId> out;
        if (k == 0 || k > kmax) return out;
        const auto& level = d[k - 1];
        for (NodeId v = 0; v < level.size(); ++v)
            if (level[v] >= dmin && level[v] > 0) out.push_back(v);
        return out;
    }

    std::uint32_t dmax(std::uint32_t k) const {
        const auto& level = d[k - 1];
        return level.empty() ? 0 : *std::max_element(level.begin(), level.end());
    }
};

namespace detail {

/// Degree-bucket peel of the strong subhypergraph on `keep`. Nodes whose
/// residual neighbor count falls below `min_neighbors` are dropped into the
/// current cell. Returns the pop level of each kept node (0 elsewhere).
inline std::vector<std::uint32_t> degree_peel(const Hypergraph& h, std::span<const char> keep,
                                              std::size_t min_neighbors) {
    const std::size_t n = h.num_nodes();
    std::vector<std::uint32_t> level(n, 0);
    Residual residual(h, keep);
    std::size_t max_deg = 0;
    for (NodeId v = 0; v < n; ++v)
        if (keep[v]) max_deg = std::max(max_deg, residual.degree(v));
    BucketQueue buckets(n, max_deg);
    for (NodeId v = 0; v < n; ++v)
        if (keep[v]) buckets.put(v, static_cast<std::uint32_t>(residual.degree(v)));

    std::vector<NodeId> nbrs;
    for (std::uint32_t d = 0; d < buckets.num_cells(); ++d) {
        while (auto popped = buckets.pop(d)) {
            const NodeId v = *popped;
            level[v] = d;
            nbrs = residual.neighbors(v);
            residual.remove(v);
            for (NodeId u : nbrs) {
                std::uint32_t target = d;
                if (residual.neighbor_count(u) >= min_neighbors)
                    target = std::max(static_cast<std::uint32_t>(residual.degree(u)), d);
                if (target != buckets.key(u)) buckets.put(u, target);
            }
        }
    }
    return level;
}

} // namespace detail

/// (k,d)-core decomposition from known neighborhood core numbers.
inline KDCoreResult kd_decompose(const Hypergraph& h, std::span<const std::uint32_t> core) {
    KDCoreResult out;
    out.kmax = core.empty() ? 0 : *std::max_element(core.begin(), core.end());
    out.d.reserve(out.kmax);
    std::vector<char> keep(h.num_nodes());
    for (std::uint32_t k = 1; k <= out.kmax; ++k) {
        for (NodeId v = 0; v < h.num_nodes(); ++v) keep[v] = core[v] >= k ? 1 : 0;
        out.d.push_back(detail::degree_peel(h, keep, k));
    }
    return out;
}

/// Computes neighborhood cores with local_core, then peels each nbr-k-core by degree.
inline KDCoreResult kd_decompose(const Hypergraph& h, const LocalCoreOptions& opts = {}) {
    const auto cores = local_core(h, opts).cores;
    return kd_decompose(h, cores.core);
}

/// Degree-based core numbers (at least k incident edges inside a strong subhypergraph).
inline CoreAssignment degree_core(const Hypergraph& h) {
    std::vector<char> keep(h.num_nodes(), 1);
    CoreAssignment out;
    out.core = detail::degree_peel(h, keep, 0);
    return out;
}

} // namespace hgcore

#endif // HGCORE_KDCORE_HPP
