#ifndef EVROUTE_UTILITY_SEARCH_HPP
#define EVROUTE_UTILITY_SEARCH_HPP

#include "evroute/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <queue>
#include <span>
#include <string>
#include <vector>

namespace evroute {

/// Linear utility: cost = alpha * time + beta * energy.
struct PreferencePair {
    double alpha = 1.0;
    double beta = 0.0;

    bool valid() const {
        return std::isfinite(alpha) && std::isfinite(beta) && alpha >= 0.0 && beta >= 0.0 &&
               alpha + beta > 0.0;
    }

    friend bool operator==(const PreferencePair &, const PreferencePair &) = default;
};

inline void require_valid(const PreferencePair &pref) {
    if (!pref.valid()) {
        throw InvalidArgument("preference pair needs alpha, beta >= 0 and alpha + beta > 0");
    }
}

inline double scalar_cost(const BiWeight &w, const PreferencePair &pref) {
    return pref.alpha * static_cast<double>(w.time) + pref.beta * static_cast<double>(w.energy);
}

enum class Direction { outbound, inbound };
enum class TreeAlgorithm { automatic, priority_queue, label_correcting };

/// Instrumentation shared by the tree-based searches.
struct SearchStats {
    std::uint64_t tree_builds = 0;
    std::uint64_t priority_queue_builds = 0;
    std::uint64_t label_correcting_builds = 0;
    std::uint64_t score_evaluations = 0;
};

/// Union of preference-optimal paths from (outbound) or into (inbound) a root.
/// For inbound trees the parent edge of v leads from v toward the root.
class ShortestPathTree {
  public:
    ShortestPathTree() = default;
    ShortestPathTree(VertexId root, Direction direction, PreferencePair pref, std::size_t n)
        : root_{root}, direction_{direction}, pref_{pref}, cost_(n, 0.0), weight_(n),
          parent_edge_(n, kNoEdge), parent_vertex_(n, kNoVertex), reached_(n, 0) {}

    VertexId root() const noexcept { return root_; }
    Direction direction() const noexcept { return direction_; }
    const PreferencePair &pref() const noexcept { return pref_; }
    TreeAlgorithm algorithm() const noexcept { return algorithm_; }
    std::size_t vertex_count() const noexcept { return reached_.size(); }

    bool reached(VertexId v) const { return reached_[v] != 0; }
    double cost(VertexId v) const { return cost_[v]; }
    const BiWeight &weight(VertexId v) const { return weight_[v]; }
    EdgeId parent_edge(VertexId v) const { return parent_edge_[v]; }
    VertexId parent_vertex(VertexId v) const { return parent_vertex_[v]; }

  private:
    friend ShortestPathTree shortest_tree(const RoadGraph &, VertexId, const PreferencePair &,
                                          Direction, TreeAlgorithm, SearchStats *);

    VertexId root_ = kNoVertex;
    Direction direction_ = Direction::outbound;
    PreferencePair pref_;
    TreeAlgorithm algorithm_ = TreeAlgorithm::automatic;
    std::vector<double> cost_;
    std::vector<BiWeight> weight_;
    std::vector<EdgeId> parent_edge_;
    std::vector<VertexId> parent_vertex_;
    std::vector<std::uint8_t> reached_;
};

namespace detail {

// Total order used for optimality and tie-breaking: scalar cost, then time,
// then energy. Costs are always recomputed from the integer totals, so equal
// totals compare equal exactly.
struct TreeKey {
    double cost = 0.0;
    Seconds time = 0;
    WattHours energy = 0;

    friend bool operator<(const TreeKey &a, const TreeKey &b) {
        if (a.cost != b.cost) {
            return a.cost < b.cost;
        }
        if (a.time != b.time) {
            return a.time < b.time;
        }
        return a.energy < b.energy;
    }
    friend bool operator==(const TreeKey &, const TreeKey &) = default;
};

inline TreeKey key_of(const BiWeight &w, const PreferencePair &pref) {
    return {scalar_cost(w, pref), w.time, w.energy};
}

inline bool edge_key_non_negative(const BiWeight &w, const PreferencePair &pref) {
    const double c = scalar_cost(w, pref);
    if (c != 0.0) {
        return c > 0.0;
    }
    return w.time > 0 || (w.time == 0 && w.energy >= 0);
}

} // namespace detail

/// True when every non-charger edge has a non-negative key under pref, so the
/// priority-queue search is exact.
inline bool priority_queue_applicable(const RoadGraph &g, const PreferencePair &pref) {
    for (const StyledEdge &e : g.edges()) {
        if (!e.is_charger_loop && !detail::edge_key_non_negative(e.weight, pref)) {
            return false;
        }
    }
    return true;
}

/// Single-phase optimal tree under pref. Charger self-loops are not used.
/// Ties on (cost, time, energy) prefer the smaller last-edge index among
/// predecessors with strictly smaller key; otherwise the first-found parent stays.
inline ShortestPathTree shortest_tree(const RoadGraph &g, VertexId root, const PreferencePair &pref,
                                      Direction direction,
                                      TreeAlgorithm algorithm = TreeAlgorithm::automatic,
                                      SearchStats *stats = nullptr) {
    require_valid(pref);
    if (!g.valid(root)) {
        throw InvalidArgument("tree root out of range");
    }
    if (algorithm == TreeAlgorithm::automatic) {
        algorithm = priority_queue_applicable(g, pref) ? TreeAlgorithm::priority_queue
                                                       : TreeAlgorithm::label_correcting;
    }

    const std::size_t n = g.vertex_count();
    ShortestPathTree tree(root, direction, pref, n);
    tree.algorithm_ = algorithm;
    std::vector<detail::TreeKey> key(n);

    const bool outbound = direction == Direction::outbound;
    const auto adjacent = [&](VertexId u) { return outbound ? g.out_edges(u) : g.in_edges(u); };
    const auto other_end = [&](const StyledEdge &e) { return outbound ? e.to : e.from; };

    tree.reached_[root] = 1;
    key[root] = {0.0, 0, 0};

    // True when v was updated; key_changed tells whether its key moved.
    const auto relax = [&](VertexId u, EdgeId eid, bool &key_changed) {
        const StyledEdge &e = g.edge(eid);
        const VertexId v = other_end(e);
        const BiWeight w = add_weights(tree.weight_[u], e.weight);
        const detail::TreeKey cand = detail::key_of(w, pref);
        key_changed = false;
        if (!tree.reached_[v] || cand < key[v]) {
            key_changed = true;
        } else if (v == root || !(cand == key[v] && key[u] < key[v] && eid < tree.parent_edge_[v])) {
            return false;
        }
        tree.reached_[v] = 1;
        key[v] = cand;
        tree.weight_[v] = w;
        tree.cost_[v] = cand.cost;
        tree.parent_edge_[v] = eid;
        tree.parent_vertex_[v] = u;
        return true;
    };

    if (algorithm == TreeAlgorithm::priority_queue) {
        using Entry = std::pair<detail::TreeKey, VertexId>;
        const auto greater = [](const Entry &a, const Entry &b) {
            if (a.first == b.first) {
                return a.second > b.second;
            }
            return b.first < a.first;
        };
        std::priority_queue<Entry, std::vector<Entry>, decltype(greater)> heap(greater);
        std::vector<std::uint8_t> settled(n, 0);
        heap.push({key[root], root});
        while (!heap.empty()) {
            const auto [k, u] = heap.top();
            heap.pop();
            if (settled[u] || !(k == key[u])) {
                continue;
            }
            settled[u] = 1;
            for (EdgeId eid : adjacent(u)) {
                const StyledEdge &e = g.edge(eid);
                if (e.is_charger_loop || settled[other_end(e)]) {
                    continue;
                }
                bool key_changed = false;
                if (relax(u, eid, key_changed) && key_changed) {
                    heap.push({key[other_end(e)], other_end(e)});
                }
            }
        }
        if (stats) {
            ++stats->priority_queue_builds;
        }
    } else {
        // FIFO label-correcting search. len[v] counts edges of the walk that
        // produced v's current key; a walk of n edges repeats a vertex with a
        // strictly smaller key, i.e. a negative cycle.
        std::deque<VertexId> queue{root};
        std::vector<std::uint8_t> queued(n, 0);
        std::vector<std::size_t> len(n, 0);
        queued[root] = 1;
        while (!queue.empty()) {
            const VertexId u = queue.front();
            queue.pop_front();
            queued[u] = 0;
            for (EdgeId eid : adjacent(u)) {
                const StyledEdge &e = g.edge(eid);
                if (e.is_charger_loop) {
                    continue;
                }
                const VertexId v = other_end(e);
                bool key_changed = false;
                if (!relax(u, eid, key_changed) || !key_changed) {
                    continue;
                }
                len[v] = len[u] + 1;
                if (len[v] >= n) {
                    throw NegativeScalarCycle("negative cycle under preference (" +
                                              std::to_string(pref.alpha) + ", " +
                                              std::to_string(pref.beta) + ")");
                }
                if (!queued[v]) {
                    queued[v] = 1;
                    queue.push_back(v);
                }
            }
        }
        if (stats) {
            ++stats->label_correcting_builds;
        }
    }
    if (stats) {
        ++stats->tree_builds;
    }
    return tree;
}

/// Tree path between v and the root, in driving order.
inline std::vector<EdgeId> extract_tree_path(const ShortestPathTree &tree, VertexId v) {
    if (v >= tree.vertex_count() || !tree.reached(v)) {
        throw Unreachable("vertex " + std::to_string(v) + " not in tree");
    }
    std::vector<EdgeId> path;
    for (VertexId cur = v; cur != tree.root(); cur = tree.parent_vertex(cur)) {
        path.push_back(tree.parent_edge(cur));
    }
    if (tree.direction() == Direction::outbound) {
        std::reverse(path.begin(), path.end());
    }
    return path;
}

} // namespace evroute

#endif
