#ifndef HGCORE_MAXFLOW_HPP
#define HGCORE_MAXFLOW_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hgcore {

/// Dinic's algorithm over an integral capacity type (built-in or
/// boost::multiprecision). Blocking flows are found with an explicit stack,
/// so path length is not limited by the call stack.
template <typename Cap>
class Dinic {
public:
    explicit Dinic(std::size_t vertices) : adj_(vertices), level_(vertices), it_(vertices) {}

    std::size_t num_vertices() const noexcept { return adj_.size(); }

    /// Adds arc a -> b with capacity c. Returns the arc index.
    std::size_t add_edge(std::size_t a, std::size_t b, Cap c) {
        const std::size_t id = arcs_.size();
        arcs_.push_back({b, c});
        adj_[a].push_back(id);
        arcs_.push_back({a, Cap(0)});
        adj_[b].push_back(id + 1);
        return id;
    }

    Cap max_flow(std::size_t s, std::size_t t) {
        Cap total = 0;
        while (bfs(s, t)) {
            std::fill(it_.begin(), it_.end(), 0);
            while (true) {
                Cap pushed = augment(s, t);
                if (pushed == 0) break;
                total += pushed;
            }
        }
        return total;
    }

    /// Vertices reachable from s in the final residual network: the source
    /// side of a minimum cut. Call after max_flow.
    std::vector<char> source_side(std::size_t s) const {
        std::vector<char> seen(adj_.size(), 0);
        std::vector<std::size_t> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t id : adj_[v]) {
                const Arc& a = arcs_[id];
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    stack.push_back(a.to);
                }
            }
        }
        return seen;
    }

    /// Flow currently routed through arc `id` (as returned by add_edge).
    Cap flow_on(std::size_t id) const { return arcs_[id ^ 1].cap; }

private:
    struct Arc {
        std::size_t to;
        Cap cap;
    };

    bool bfs(std::size_t s, std::size_t t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::vector<std::size_t> queue{s};
        level_[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::size_t v = queue[head];
            for (std::size_t id : adj_[v]) {
                const Arc& a = arcs_[id];
                if (a.cap > 0 && level_[a.to] < 0) {
                    level_[a.to] = level_[v] + 1;
                    queue.push_back(a.to);
                }
            }
        }
        return level_[t] >= 0;
    }

    // One augmenting path in the level graph; dead ends advance it_.
    Cap augment(std::size_t s, std::size_t t) {
        std::vector<std::size_t> path;  // arc ids
        std::size_t v = s;
        while (true) {
            if (v == t) {
                Cap bottleneck = arcs_[path.front()].cap;
                for (std::size_t id : path) bottleneck = std::min(bottleneck, arcs_[id].cap);
                for (std::size_t id : path) {
                    arcs_[id].cap -= bottleneck;
                    arcs_[id ^ 1].cap += bottleneck;
                }
                return bottleneck;
            }
            bool advanced = false;
            for (auto& i = it_[v]; i < adj_[v].size(); ++i) {
                const std::size_t id = adj_[v][i];
                const Arc& a = arcs_[id];
                if (a.cap > 0 && level_[a.to] == level_[v] + 1) {
                    path.push_back(id);
                    v = a.to;
                    advanced = true;
                    break;
                }
            }
            if (advanced) continue;
            if (v == s) return 0;
            level_[v] = -1;  // dead end
            const std::size_t back = path.back();
            path.pop_back();
            v = arcs_[back ^ 1].to;
            ++it_[v];
        }
    }

    std::vector<Arc> arcs_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<int> level_;
    std::vector<std::size_t> it_;
};

} // namespace hgcore

#endif // HGCORE_MAXFLOW_HPP
