#ifndef HGCORE_DIFFUSION_HPP
#define HGCORE_DIFFUSION_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgcore/error.hpp"
#include "hgcore/model.hpp"
#include "hgcore/rational.hpp"

namespace hgcore {

struct SirOutcome {
    std::vector<NodeId> infected;  // ascending ids
    std::map<NodeId, std::uint32_t> infection_time;
    std::size_t spread = 0;
};

inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Uniform [0,1) draw for the attempt infector -> target. Each ordered pair
/// gets its own value per rng_seed, so raising beta never removes an infection.
inline double attempt_uniform(std::uint64_t rng_seed, NodeId infector, NodeId target) noexcept {
    const std::uint64_t pair = (static_cast<std::uint64_t>(infector) << 32) | target;
    const std::uint64_t bits = splitmix64(splitmix64(rng_seed) ^ pair);
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Generator seed used for run number `run` of a batch started from `rng_seed`.
inline std::uint64_t run_seed(std::uint64_t rng_seed, std::uint64_t run) noexcept {
    return splitmix64(rng_seed + run);
}

/// Discrete-time SIR from one seed. At step t every node infected at step
/// t-1 attempts each susceptible neighbor once (ids ascending), firing when
/// its attempt uniform is below beta, and is then immunized.
inline SirOutcome sir_run(const Hypergraph& h, NodeId seed, double beta, std::uint32_t max_steps,
                          std::uint64_t rng_seed) {
    if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0, 1]");
    if (seed >= h.num_nodes()) throw std::invalid_argument("seed node out of range");

    constexpr std::uint32_t kSusceptible = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> when(h.num_nodes(), kSusceptible);
    when[seed] = 0;
    std::vector<NodeId> active{seed}, next;
    for (std::uint32_t step = 1; step <= max_steps && !active.empty(); ++step) {
        next.clear();
        std::sort(active.begin(), active.end());
        for (NodeId v : active) {
            for (NodeId u : h.neighbors(v)) {
                if (when[u] != kSusceptible) continue;
                if (attempt_uniform(rng_seed, v, u) < beta) {
                    when[u] = step;
                    next.push_back(u);
                }
            }
        }
        active.swap(next);
    }

    SirOutcome out;
    for (NodeId v = 0; v < h.num_nodes(); ++v) {
        if (when[v] == kSusceptible) continue;
        out.infected.push_back(v);
        out.infection_time.emplace(v, when[v]);
    }
    out.spread = out.infected.size();
    return out;
}

inline constexpr std::size_t kSirEnumerationLimit = 20;

/// Exact expected final spread with no step cap. Each potential attempt
/// (ordered neighbor pair out of a reachable node) fires independently, and
/// the final infected set is what the seed reaches through fired attempts,
/// so the expectation is a sum over all fire/no-fire patterns.
inline Rational sir_expected_spread(const Hypergraph& h, NodeId seed, const Rational& beta) {
    if (beta < 0 || beta > 1) throw std::invalid_argument("beta must lie in [0, 1]");
    if (seed >= h.num_nodes()) throw std::invalid_argument("seed node out of range");

    std::vector<char> reachable(h.num_nodes(), 0);
    std::vector<NodeId> stack{seed};
    reachable[seed] = 1;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (NodeId u : h.neighbors(v))
            if (!reachable[u]) {
                reachable[u] = 1;
                stack.push_back(u);
            }
    }
    struct Attempt {
        NodeId from, to;
    };
    std::vector<Attempt> attempts;
    for (NodeId v = 0; v < h.num_nodes(); ++v)
        if (reachable[v])
            for (NodeId u : h.neighbors(v)) attempts.push_back({v, u});
    const std::size_t a = attempts.size();
    if (a > kSirEnumerationLimit)
        throw GuardError("exact spread enumeration limited to " + std::to_string(kSirEnumerationLimit) +
                         " attempts, got " + std::to_string(a));

    // spread_sum[k] = total spread over patterns with exactly k fired attempts.
    std::vector<std::uint64_t> spread_sum(a + 1, 0);
    std::vector<char> hit(h.num_nodes());
    for (std::uint32_t pattern = 0; pattern < (1u << a); ++pattern) {
        std::fill(hit.begin(), hit.end(), 0);
        hit[seed] = 1;
        std::size_t spread = 1;
        for (bool grew = true; grew;) {
            grew = false;
            for (std::size_t i = 0; i < a; ++i)
                if ((pattern >> i & 1u) && hit[attempts[i].from] && !hit[attempts[i].to]) {
                    hit[attempts[i].to] = 1;
                    ++spread;
                    grew = true;
                }
        }
        spread_sum[std::popcount(pattern)] += spread;
    }

    Rational expected = 0;
    const Rational miss = 1 - beta;
    for (std::size_t k = 0; k <= a; ++k) {
        if (spread_sum[k] == 0) continue;
        Rational weight = 1;
        for (std::size_t i = 0; i < k; ++i) weight *= beta;
        for (std::size_t i = k; i < a; ++i) weight *= miss;
        expected += weight * Rational(BigInt(spread_sum[k]));
    }
    return expected;
}

/// Removes the first top_k ranked nodes with every incident hyperedge and
/// rebuilds. Nodes left without edges are reported as isolated.
inline BuildResult intervention_delete(const Hypergraph& h, std::span<const NodeId> ranked, std::size_t top_k) {
    std::vector<char> deleted(h.num_nodes(), 0);
    for (std::size_t i = 0; i < std::min(top_k, ranked.size()); ++i) deleted[ranked[i]] = 1;
    std::vector<std::vector<NodeId>> edges;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        auto members = h.edge(e);
        if (std::none_of(members.begin(), members.end(), [&](NodeId u) { return deleted[u] != 0; }))
            edges.emplace_back(members.begin(), members.end());
    }
    auto labels = h.labels();
    return Hypergraph::from_indexed({labels.begin(), labels.end()}, std::move(edges));
}

} // namespace hgcore

#endif // HGCORE_DIFFUSION_HPP
