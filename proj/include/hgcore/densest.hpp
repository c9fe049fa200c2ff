#ifndef HGCORE_DENSEST_HPP
#define HGCORE_DENSEST_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "hgcore/error.hpp"
#include "hgcore/maxflow.hpp"
#include "hgcore/model.hpp"
#include "hgcore/peel.hpp"
#include "hgcore/rational.hpp"

namespace hgcore {

enum class DensestMethod { Greedy, Exact, Brute };

inline std::string to_string(DensestMethod m) {
    switch (m) {
        case DensestMethod::Greedy: return "greedy";
        case DensestMethod::Exact: return "exact";
        case DensestMethod::Brute: return "brute";
    }
    return "unknown";
}

struct DensestResult {
    std::vector<NodeId> nodes;  // ascending ids
    Rational density;
    DensestMethod method = DensestMethod::Greedy;
    /// Approximation guarantee in effect (1 for exact and brute).
    Rational factor{1};
};

/// Average neighbor count per node in the strongly induced subhypergraph H[S].
inline Rational volume_density(const Hypergraph& h, std::span<const NodeId> nodes) {
    if (nodes.empty()) throw std::invalid_argument("volume density of an empty node set");
    SubhypergraphView view(h, nodes);
    std::uint64_t total = 0;
    for (NodeId v : view.nodes()) total += view.neighbor_count(v);
    return Rational(BigInt(total), BigInt(view.nodes().size()));
}

/// Largest number of hyperedges shared by a single pair of nodes.
inline std::size_t max_pair_multiplicity(const Hypergraph& h) {
    std::vector<std::uint32_t> shared(h.num_nodes(), 0);
    std::size_t best = 0;
    for (NodeId v = 0; v < h.num_nodes(); ++v) {
        for (EdgeId e : h.incident_edges(v))
            for (NodeId u : h.edge(e))
                if (u != v) best = std::max<std::size_t>(best, ++shared[u]);
        for (NodeId u : h.neighbors(v)) shared[u] = 0;
    }
    return best;
}

/// d_pair * (d_card - 2) + 2.
inline Rational guarantee_factor(const Hypergraph& h) {
    const auto pair = static_cast<std::int64_t>(max_pair_multiplicity(h));
    const auto card = static_cast<std::int64_t>(h.max_edge_size());
    return make_rational(pair * (card - 2) + 2);
}

/// Peels nodes in (core number, residual neighbor count, id) order and keeps
/// the densest remaining set seen, preferring the earliest on ties.
inline DensestResult greedy_densest(const Hypergraph& h) {
    DensestResult out;
    out.method = DensestMethod::Greedy;
    out.factor = guarantee_factor(h);
    const std::size_t n = h.num_nodes();
    if (n == 0) return out;

    const auto core = peel(h).core;
    Residual residual(h);
    std::vector<std::uint32_t> count(n);
    std::set<std::tuple<std::uint32_t, std::uint32_t, NodeId>> order;
    std::uint64_t total = 0;
    for (NodeId v = 0; v < n; ++v) {
        count[v] = static_cast<std::uint32_t>(h.neighbor_count(v));
        total += count[v];
        order.emplace(core[v], count[v], v);
    }

    std::uint64_t best_total = total;
    std::size_t best_size = n;
    std::size_t best_step = 0;
    std::vector<NodeId> removal;
    removal.reserve(n);
    std::vector<NodeId> nbrs;
    while (order.size() > 1) {
        const NodeId v = std::get<2>(*order.begin());
        order.erase(order.begin());
        removal.push_back(v);
        nbrs = residual.neighbors(v);
        residual.remove(v);
        total -= count[v];
        for (NodeId u : nbrs) {
            const auto now = static_cast<std::uint32_t>(residual.neighbor_count(u));
            order.erase({core[u], count[u], u});
            total -= count[u] - now;
            count[u] = now;
            order.emplace(core[u], now, u);
        }
        const std::size_t size = order.size();
        // total / size > best_total / best_size
        if (static_cast<unsigned __int128>(total) * best_size >
            static_cast<unsigned __int128>(best_total) * size) {
            best_total = total;
            best_size = size;
            best_step = removal.size();
        }
    }

    std::vector<char> gone(n, 0);
    for (std::size_t i = 0; i < best_step; ++i) gone[removal[i]] = 1;
    for (NodeId v = 0; v < n; ++v)
        if (!gone[v]) out.nodes.push_back(v);
    out.density = Rational(BigInt(best_total), BigInt(best_size));
    return out;
}

/// One evaluation of the threshold network at density guess eta.
struct FlowProbe {
    Rational eta;
    BigInt flow;       // in units of 1 / denominator(eta)
    BigInt threshold;  // total neighbor count, same units
    std::vector<NodeId> source_nodes;
    /// Source-side edge layer equals the edges induced by source_nodes.
    bool edge_layer_induced = true;
    bool below() const { return flow < threshold; }
};

namespace detail {

template <typename Cap>
FlowProbe run_flow_probe(const Hypergraph& h, const Rational& eta, const BigInt& eta_num,
                         const BigInt& den, const BigInt& inf) {
    const std::size_t n = h.num_nodes();
    const std::size_t m = h.num_edges();
    const std::size_t source = n + m;
    const std::size_t sink = source + 1;
    const Cap scale = static_cast<Cap>(den);
    const Cap big = static_cast<Cap>(inf);
    const Cap per_node = static_cast<Cap>(eta_num);

    Dinic<Cap> net(n + m + 2);
    for (NodeId u = 0; u < n; ++u) {
        net.add_edge(source, u, Cap(h.neighbor_count(u)) * scale);
        net.add_edge(u, sink, per_node);
    }
    for (EdgeId e = 0; e < m; ++e) {
        const Cap weight = Cap(h.edge_size(e) - 1) * scale;
        for (NodeId u : h.edge(e)) {
            net.add_edge(u, n + e, weight);
            net.add_edge(n + e, u, big);
        }
    }

    FlowProbe probe;
    probe.eta = eta;
    probe.flow = BigInt(net.max_flow(source, sink));
    probe.threshold = BigInt(h.total_neighbor_count()) * den;
    const auto side = net.source_side(source);
    std::vector<char> in_set(n, 0);
    for (NodeId u = 0; u < n; ++u)
        if (side[u]) {
            probe.source_nodes.push_back(u);
            in_set[u] = 1;
        }
    for (EdgeId e = 0; e < m; ++e) {
        auto members = h.edge(e);
        const bool induced =
            std::all_of(members.begin(), members.end(), [&](NodeId u) { return in_set[u] != 0; });
        if (induced != (side[n + e] != 0)) probe.edge_layer_induced = false;
    }
    return probe;
}

} // namespace detail

/// Builds the source/node/edge/sink network for guess eta with integer
/// capacities (scaled by eta's denominator) and solves it exactly. Uses
/// 64-bit arithmetic when the scaled capacities allow, arbitrary precision otherwise.
inline FlowProbe flow_probe(const Hypergraph& h, const Rational& eta) {
    const BigInt den = denominator_of(eta);
    const BigInt eta_num = numerator_of(eta);
    BigInt finite = BigInt(h.total_neighbor_count()) * den + eta_num * h.num_nodes();
    for (EdgeId e = 0; e < h.num_edges(); ++e)
        finite += BigInt(h.edge_size(e) - 1) * h.edge_size(e) * den;
    const BigInt inf = finite + 1;
    // Any flow value or residual capacity stays below inf * (arcs + 1).
    const BigInt headroom = inf * BigInt(4 * (h.num_nodes() + h.num_edges()) + 8);
    if (eta_num >= 0 && headroom < BigInt(std::numeric_limits<std::int64_t>::max()))
        return detail::run_flow_probe<std::int64_t>(h, eta, eta_num, den, inf);
    return detail::run_flow_probe<BigInt>(h, eta, eta_num, den, inf);
}

struct ExactTrace {
    std::vector<FlowProbe> probes;
    Rational lower, upper;
    Rational gap_bound;  // 1 / (2 |V|^2)
};

/// Binary search on eta between the whole-graph density and the total
/// neighbor count, shrinking until the interval is narrower than 1/(2|V|^2).
/// A probe whose flow falls short of the total neighbor count yields a
/// candidate set from the min-cut source side.
inline DensestResult exact_densest(const Hypergraph& h, ExactTrace* trace = nullptr) {
    DensestResult out;
    out.method = DensestMethod::Exact;
    out.factor = 1;
    const std::size_t n = h.num_nodes();
    if (n == 0) return out;

    const BigInt total(h.total_neighbor_count());
    Rational lower(total, BigInt(n));
    Rational upper(total);
    const Rational gap(BigInt(1), BigInt(2) * n * n);
    for (NodeId v = 0; v < n; ++v) out.nodes.push_back(v);
    out.density = lower;

    while (upper - lower >= gap) {
        const Rational eta = (lower + upper) / 2;
        FlowProbe probe = flow_probe(h, eta);
        if (probe.below() && !probe.source_nodes.empty()) {
            lower = eta;
            out.nodes = probe.source_nodes;
        } else {
            upper = eta;
        }
        if (trace) trace->probes.push_back(std::move(probe));
    }
    out.density = volume_density(h, out.nodes);
    if (trace) {
        trace->lower = lower;
        trace->upper = upper;
        trace->gap_bound = gap;
    }
    return out;
}

inline constexpr std::size_t kBruteForceNodeLimit = 20;

/// Enumerates every non-empty node subset.
inline DensestResult brute_force_densest(const Hypergraph& h) {
    const std::size_t n = h.num_nodes();
    if (n > kBruteForceNodeLimit)
        throw GuardError("subset enumeration limited to " + std::to_string(kBruteForceNodeLimit) +
                         " nodes, got " + std::to_string(n));
    DensestResult out;
    out.method = DensestMethod::Brute;
    out.factor = 1;
    if (n == 0) return out;

    std::vector<std::uint32_t> edge_mask(h.num_edges(), 0);
    for (EdgeId e = 0; e < h.num_edges(); ++e)
        for (NodeId u : h.edge(e)) edge_mask[e] |= 1u << u;

    std::uint64_t best_total = 0, best_size = 1;
    std::uint32_t best_mask = 0;
    std::vector<std::uint32_t> reach(n);
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
        std::fill(reach.begin(), reach.end(), 0);
        for (std::uint32_t em : edge_mask) {
            if ((em & mask) != em) continue;
            for (std::uint32_t bits = em; bits; bits &= bits - 1) reach[std::countr_zero(bits)] |= em;
        }
        std::uint64_t total = 0;
        for (std::uint32_t bits = mask; bits; bits &= bits - 1) {
            const int u = std::countr_zero(bits);
            total += std::popcount(reach[u] & ~(1u << u));
        }
        const std::uint64_t size = std::popcount(mask);
        if (best_mask == 0 || total * best_size > best_total * size) {
            best_total = total;
            best_size = size;
            best_mask = mask;
        }
    }
    for (NodeId v = 0; v < n; ++v)
        if (best_mask & (1u << v)) out.nodes.push_back(v);
    out.density = Rational(BigInt(best_total), BigInt(best_size));
    return out;
}

} // namespace hgcore

#endif // HGCORE_DENSEST_HPP
