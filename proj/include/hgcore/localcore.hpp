#ifndef HGCORE_LOCALCORE_HPP
#define HGCORE_LOCALCORE_HPP

#include <algorithm>
#include <atomic>
#include <barrier>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hgcore/model.hpp"
#include "hgcore/peel.hpp"

namespace hgcore {

/// Largest y such that at least y of the values are >= y (0 for no values).
inline std::uint32_t h_operator(std::span<const std::uint32_t> values) {
    const std::size_t t = values.size();
    std::vector<std::uint32_t> counts(t + 1, 0);
    for (std::uint32_t x : values) ++counts[std::min<std::size_t>(x, t)];
    std::size_t at_least = 0;
    for (std::size_t y = t; y >= 1; --y) {
        at_least += counts[y];
        if (at_least >= y) return static_cast<std::uint32_t>(y);
    }
    return 0;
}

/// Definitional core-correction: the largest k' <= k such that the incident
/// edges whose members all have estimate >= k' cover at least k' neighbors
/// of v. Scans every incident edge afresh for each candidate k'.
inline std::uint32_t core_correction(const Hypergraph& h, NodeId v, std::uint32_t k,
                                     std::span<const std::uint32_t> estimates) {
    std::vector<char> seen(h.num_nodes(), 0);
    std::vector<NodeId> touched;
    for (; k > 0; --k) {
        for (NodeId u : touched) seen[u] = 0;
        touched.clear();
        for (EdgeId e : h.incident_edges(v)) {
            auto members = h.edge(e);
            if (!std::all_of(members.begin(), members.end(), [&](NodeId u) { return estimates[u] >= k; }))
                continue;
            for (NodeId u : members) {
                if (u != v && !seen[u]) {
                    seen[u] = 1;
                    touched.push_back(u);
                }
            }
        }
        if (touched.size() >= k) return k;
    }
    return 0;
}

struct LocalCoreOptions {
    /// Edge index + bucket recurrence + early exit inside core-correction.
    bool use_opt2 = true;
    /// Read the freshest neighbor estimates instead of the previous round's.
    bool use_opt3 = true;
    /// Freeze nodes whose estimate reached their local lower bound.
    bool use_opt4 = true;
    unsigned threads = 1;
    /// Stop adding edges as soon as the covered neighbor count reaches k.
    /// Only meaningful with use_opt2.
    bool lccsat_early_exit = true;
    /// Cross-check every bucket-recurrence neighbor count against a direct
    /// scan; throws std::logic_error on mismatch.
    bool verify_opt2 = false;
    /// Keep a copy of all estimates after every round.
    bool record_trace = false;
};

struct LocalCoreStats {
    /// Barrier-delimited rounds executed, including the final quiet one.
    std::uint32_t rounds = 0;
    std::vector<std::uint64_t> corrected_per_round;
    std::uint64_t h_evaluations = 0;
    std::uint64_t correction_iterations = 0;
    std::uint64_t lccsat_edge_scans = 0;
    std::uint64_t frozen_skips = 0;
    /// trace[0] is the initial estimate (|N(v)|), trace[n] the estimate after round n.
    std::vector<std::vector<std::uint32_t>> trace;
};

struct LocalCoreResult {
    CoreAssignment cores;
    LocalCoreStats stats;
};

namespace detail {

/// Per-thread scratch space and work counters.
struct LocalWorker {
    std::vector<std::uint32_t> counts;
    std::vector<std::uint32_t> mark;
    std::uint32_t stamp = 0;
    std::vector<std::pair<std::uint32_t, EdgeId>> keyed;
    std::uint64_t h_evaluations = 0;
    std::uint64_t correction_iterations = 0;
    std::uint64_t lccsat_edge_scans = 0;
    std::uint64_t frozen_skips = 0;
    std::uint64_t corrected = 0;

    LocalWorker(std::size_t nodes, std::size_t max_neighbors) : counts(max_neighbors + 1, 0), mark(nodes, 0) {}

    std::uint32_t next_stamp() {
        if (++stamp == 0) {
            std::fill(mark.begin(), mark.end(), 0);
            stamp = 1;
        }
        return stamp;
    }

    template <typename Read>
    std::uint32_t h_index(std::span<const NodeId> nbrs, Read&& read) {
        ++h_evaluations;
        const std::size_t t = nbrs.size();
        std::fill(counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(t + 1), 0);
        for (NodeId u : nbrs) ++counts[std::min<std::size_t>(read(u), t)];
        std::size_t at_least = 0;
        for (std::size_t y = t; y >= 1; --y) {
            at_least += counts[y];
            if (at_least >= y) return static_cast<std::uint32_t>(y);
        }
        return 0;
    }
};

/// Partitions nodes over threads, longest-processing-time first on |N(v)|.
inline std::vector<std::vector<NodeId>> lpt_partition(const Hypergraph& h, unsigned parts) {
    std::vector<NodeId> order(h.num_nodes());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeId a, NodeId b) { return h.neighbor_count(a) > h.neighbor_count(b); });
    using Load = std::pair<std::uint64_t, unsigned>;
    std::priority_queue<Load, std::vector<Load>, std::greater<>> loads;
    for (unsigned t = 0; t < parts; ++t) loads.push({0, t});
    std::vector<std::vector<NodeId>> out(parts);
    for (NodeId v : order) {
        auto [load, t] = loads.top();
        loads.pop();
        out[t].push_back(v);
        loads.push({load + h.neighbor_count(v) + 1, t});
    }
    for (auto& part : out) std::sort(part.begin(), part.end());
    return out;
}

class LocalCoreEngine {
public:
    LocalCoreEngine(const Hypergraph& h, const LocalCoreOptions& opts) : h_(h), opts_(opts) {
        if (opts_.threads == 0) throw std::invalid_argument("LocalCoreOptions::threads must be >= 1");
        const std::size_t n = h.num_nodes();
        lb_ = local_lower_bounds(h);
        est_.resize(n);
        for (NodeId v = 0; v < n; ++v) est_[v] = static_cast<std::uint32_t>(h.neighbor_count(v));
        if (!opts_.use_opt3) {
            round_h_ = est_;
            next_ = est_;
        }
        if (opts_.use_opt2) edge_min_.assign(h.num_edges(), 0);
        if (opts_.verify_opt2 && opts_.use_opt2 && opts_.use_opt3) snapshot_.resize(n);
        parts_ = lpt_partition(h, opts_.threads);
        const std::size_t max_nbrs = detail::max_neighbor_count(h);
        workers_.reserve(opts_.threads);
        for (unsigned t = 0; t < opts_.threads; ++t) workers_.emplace_back(n, max_nbrs);
    }

    LocalCoreResult run() {
        LocalCoreResult result;
        if (opts_.record_trace) stats_.trace.push_back(est_);
        if (h_.num_nodes() > 0) {
            if (opts_.threads == 1) {
                std::barrier<> sync(1);
                work(0, sync);
            } else {
                std::barrier<> sync(static_cast<std::ptrdiff_t>(opts_.threads));
                std::vector<std::jthread> pool;
                pool.reserve(opts_.threads);
                for (unsigned t = 0; t < opts_.threads; ++t)
                    pool.emplace_back([this, t, &sync] { work(t, sync); });
            }
        }
        for (const auto& w : workers_) {
            stats_.h_evaluations += w.h_evaluations;
            stats_.correction_iterations += w.correction_iterations;
            stats_.lccsat_edge_scans += w.lccsat_edge_scans;
            stats_.frozen_skips += w.frozen_skips;
        }
        result.cores.core = est_;
        result.stats = std::move(stats_);
        return result;
    }

private:
    // Estimates are shared between threads under Opt-III, so every access
    // to est_ goes through a relaxed atomic_ref.
    std::uint32_t load(const std::vector<std::uint32_t>& a, NodeId v) const {
        return std::atomic_ref<std::uint32_t>(const_cast<std::uint32_t&>(a[v])).load(std::memory_order_relaxed);
    }
    static void store(std::vector<std::uint32_t>& a, NodeId v, std::uint32_t x) {
        std::atomic_ref<std::uint32_t>(a[v]).store(x, std::memory_order_relaxed);
    }

    bool frozen(NodeId v, std::uint32_t value) const { return opts_.use_opt4 && value == lb_[v]; }

    void work(unsigned t, std::barrier<>& sync) {
        LocalWorker& w = workers_[t];
        const auto& mine = parts_[t];
        const std::size_t m = h_.num_edges();
        const std::size_t edge_lo = m * t / opts_.threads;
        const std::size_t edge_hi = m * (t + 1) / opts_.threads;
        for (;;) {
            // Estimate update.
            if (opts_.use_opt3) {
                for (NodeId v : mine) {
                    const std::uint32_t cur = load(est_, v);
                    if (frozen(v, cur)) {
                        ++w.frozen_skips;
                        continue;
                    }
                    const std::uint32_t hv = w.h_index(h_.neighbors(v), [&](NodeId u) { return load(est_, u); });
                    if (hv < cur) store(est_, v, hv);
                }
            } else {
                for (NodeId v : mine) {
                    const std::uint32_t prev = est_[v];
                    if (frozen(v, prev)) {
                        ++w.frozen_skips;
                        round_h_[v] = prev;
                        continue;
                    }
                    const std::uint32_t hv = w.h_index(h_.neighbors(v), [&](NodeId u) { return est_[u]; });
                    round_h_[v] = std::min(hv, prev);
                }
            }
            sync.arrive_and_wait();

            // Edge index over the values the correction sweep will test.
            if (opts_.use_opt2) {
                const auto& src = opts_.use_opt3 ? est_ : round_h_;
                for (std::size_t e = edge_lo; e < edge_hi; ++e) {
                    std::uint32_t lo = static_cast<std::uint32_t>(-1);
                    for (NodeId u : h_.edge(static_cast<EdgeId>(e))) lo = std::min(lo, load(src, u));
                    edge_min_[e] = lo;
                }
                if (!snapshot_.empty())
                    for (NodeId v : mine) snapshot_[v] = load(est_, v);
            }
            sync.arrive_and_wait();

            // Core-correction.
            w.corrected = 0;
            if (opts_.use_opt3) {
                for (NodeId v : mine) {
                    const std::uint32_t k = load(est_, v);
                    if (frozen(v, k)) continue;
                    const std::uint32_t fixed = correct(w, v, k, est_);
                    if (fixed != k) {
                        store(est_, v, fixed);
                        ++w.corrected;
                    }
                }
            } else {
                for (NodeId v : mine) {
                    const std::uint32_t k = round_h_[v];
                    if (frozen(v, k)) {
                        next_[v] = k;
                    } else {
                        next_[v] = correct(w, v, k, round_h_);
                        if (next_[v] != k) ++w.corrected;
                    }
                }
            }
            sync.arrive_and_wait();

            if (t == 0) {
                if (!opts_.use_opt3) est_.swap(next_);
                std::uint64_t total = 0;
                for (const auto& other : workers_) total += other.corrected;
                ++stats_.rounds;
                stats_.corrected_per_round.push_back(total);
                if (opts_.record_trace) stats_.trace.push_back(est_);
                done_ = total == 0;
            }
            sync.arrive_and_wait();
            if (done_) return;
        }
    }

    std::uint32_t correct(LocalWorker& w, NodeId v, std::uint32_t k, const std::vector<std::uint32_t>& values) {
        const std::uint32_t result = opts_.use_opt2 ? correct_indexed(w, v, k) : correct_direct(w, v, k, values);
        w.correction_iterations += k - result;
        if (opts_.verify_opt2 && opts_.use_opt2)
            verify_recurrence(w, v, k, result, opts_.use_opt3 ? snapshot_ : values);
        return result;
    }

    // Re-tests every incident edge at each candidate k.
    std::uint32_t correct_direct(LocalWorker& w, NodeId v, std::uint32_t k, const std::vector<std::uint32_t>& values) {
        for (; k > 0; --k) {
            const std::uint32_t stamp = w.next_stamp();
            w.mark[v] = stamp;
            std::size_t covered = 0;
            for (EdgeId e : h_.incident_edges(v)) {
                ++w.lccsat_edge_scans;
                auto members = h_.edge(e);
                if (!std::all_of(members.begin(), members.end(), [&](NodeId u) { return load(values, u) >= k; }))
                    continue;
                for (NodeId u : members) {
                    if (w.mark[u] != stamp) {
                        w.mark[u] = stamp;
                        ++covered;
                    }
                }
            }
            if (covered >= k) return k;
        }
        return 0;
    }

    // Bucket recurrence: incident edges are keyed by min(edge_min, k) and
    // consumed from the top key down, so N+(v, k) = N+(v, k + 1) plus the
    // members of the edges keyed exactly k. Each edge is traversed once.
    std::uint32_t correct_indexed(LocalWorker& w, NodeId v, std::uint32_t k) {
        auto& keyed = w.keyed;
        keyed.clear();
        for (EdgeId e : h_.incident_edges(v)) {
            const std::uint32_t key = std::min(edge_min_[e], k);
            if (key > 0) keyed.push_back({key, e});
        }
        std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        const std::uint32_t stamp = w.next_stamp();
        w.mark[v] = stamp;
        std::size_t covered = 0;
        std::size_t next = 0;
        while (k > 0) {
            while (next < keyed.size() && keyed[next].first >= k) {
                ++w.lccsat_edge_scans;
                for (NodeId u : h_.edge(keyed[next].second)) {
                    if (w.mark[u] != stamp) {
                        w.mark[u] = stamp;
                        ++covered;
                    }
                }
                ++next;
                if (opts_.lccsat_early_exit && covered >= k) return k;
            }
            if (covered >= k) return k;
            // N+ stays fixed until the next key; jump to the best k' in between.
            const std::uint32_t floor_key = next < keyed.size() ? keyed[next].first : 0;
            const std::uint32_t candidate = std::min<std::uint32_t>(k - 1, static_cast<std::uint32_t>(covered));
            if (candidate > floor_key) return candidate;
            k = floor_key;
        }
        return 0;
    }

    void verify_recurrence(LocalWorker& w, NodeId v, std::uint32_t k_top, std::uint32_t result,
                           const std::vector<std::uint32_t>& values) {
        const std::uint32_t lowest = std::max<std::uint32_t>(result, 1);
        // Bucket recurrence, no early exit.
        std::vector<std::size_t> via_buckets;
        {
            std::vector<std::pair<std::uint32_t, EdgeId>> keyed;
            for (EdgeId e : h_.incident_edges(v)) keyed.push_back({std::min(edge_min_[e], k_top), e});
            std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
            const std::uint32_t stamp = w.next_stamp();
            w.mark[v] = stamp;
            std::size_t covered = 0, next = 0;
            for (std::uint32_t k = k_top; k >= lowest; --k) {
                while (next < keyed.size() && keyed[next].first >= k) {
                    for (NodeId u : h_.edge(keyed[next].second))
                        if (w.mark[u] != stamp) {
                            w.mark[u] = stamp;
                            ++covered;
                        }
                    ++next;
                }
                via_buckets.push_back(covered);
            }
        }
        // Direct definition against the same values the index was built from.
        std::size_t i = 0;
        for (std::uint32_t k = k_top; k >= lowest; --k, ++i) {
            std::vector<NodeId> cover;
            for (EdgeId e : h_.incident_edges(v)) {
                auto members = h_.edge(e);
                if (std::all_of(members.begin(), members.end(), [&](NodeId u) { return load(values, u) >= k; }))
                    for (NodeId u : members)
                        if (u != v) cover.push_back(u);
            }
            std::sort(cover.begin(), cover.end());
            cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
            if (cover.size() != via_buckets[i])
                throw std::logic_error("bucket recurrence disagrees with direct N+ scan at node " +
                                       std::to_string(v) + ", k=" + std::to_string(k));
        }
    }

    const Hypergraph& h_;
    LocalCoreOptions opts_;
    std::vector<std::uint32_t> lb_;
    std::vector<std::uint32_t> est_;      // current corrected estimates
    std::vector<std::uint32_t> round_h_;  // this round's uncorrected values (Opt-III off)
    std::vector<std::uint32_t> next_;     // corrected values being written (Opt-III off)
    std::vector<std::uint32_t> edge_min_;
    std::vector<std::uint32_t> snapshot_;
    std::vector<std::vector<NodeId>> parts_;
    std::vector<LocalWorker> workers_;
    LocalCoreStats stats_;
    bool done_ = false;
};

} // namespace detail

/// Local h-index fixpoint with core-correction. Converges to the exact
/// neighborhood core numbers for every option combination and thread count.
inline LocalCoreResult local_core(const Hypergraph& h, const LocalCoreOptions& opts = {}) {
    detail::LocalCoreEngine engine(h, opts);
    return engine.run();
}

/// Graph-style h-index iteration without correction. On hypergraphs the
/// limit can exceed the true core number; kept as a comparison baseline.
inline CoreAssignment naive_graph_h_index(const Hypergraph& h, std::uint32_t* rounds = nullptr) {
    const std::size_t n = h.num_nodes();
    std::vector<std::uint32_t> cur(n), next(n);
    for (NodeId v = 0; v < n; ++v) cur[v] = static_cast<std::uint32_t>(h.neighbor_count(v));
    detail::LocalWorker w(n, detail::max_neighbor_count(h));
    std::uint32_t iterations = 0;
    for (bool changed = true; changed;) {
        changed = false;
        ++iterations;
        for (NodeId v = 0; v < n; ++v) {
            next[v] = w.h_index(h.neighbors(v), [&](NodeId u) { return cur[u]; });
            changed |= next[v] != cur[v];
        }
        cur.swap(next);
    }
    if (rounds) *rounds = iterations;
    CoreAssignment out;
    out.core = std::move(cur);
    return out;
}

/// Strata of repeatedly removing every minimum-neighbor node of the residual
/// strong subhypergraph. Returns the stratum index of each node.
inline std::vector<std::uint32_t> neighborhood_hierarchy(const Hypergraph& h) {
    const std::size_t n = h.num_nodes();
    std::vector<std::uint32_t> level(n, 0);
    std::vector<std::size_t> count(n);
    for (NodeId v = 0; v < n; ++v) count[v] = h.neighbor_count(v);
    Residual residual(h);
    std::vector<NodeId> alive(n);
    std::iota(alive.begin(), alive.end(), NodeId{0});
    std::vector<char> dirty(n, 0);
    for (std::uint32_t i = 0; !alive.empty(); ++i) {
        std::size_t lowest = count[alive.front()];
        for (NodeId v : alive) lowest = std::min(lowest, count[v]);
        std::vector<NodeId> layer, rest, touched;
        for (NodeId v : alive) (count[v] == lowest ? layer : rest).push_back(v);
        for (NodeId v : layer) {
            level[v] = i;
            residual.for_each_neighbor(v, [&](NodeId u) {
                if (!dirty[u]) {
                    dirty[u] = 1;
                    touched.push_back(u);
                }
            });
        }
        for (NodeId v : layer) residual.remove(v);
        for (NodeId u : touched) {
            dirty[u] = 0;
            if (residual.alive(u)) count[u] = residual.neighbor_count(u);
        }
        alive.swap(rest);
    }
    return level;
}

} // namespace hgcore

#endif // HGCORE_LOCALCORE_HPP
