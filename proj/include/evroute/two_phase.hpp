#ifndef EVROUTE_TWO_PHASE_HPP
#define EVROUTE_TWO_PHASE_HPP

#include "evroute/graph.hpp"
#include "evroute/pareto_set.hpp"
#include "evroute/utility_search.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace evroute {

/// Weight of driving style i from the origin to switch_vertex, then style j to
/// the destination.
struct TwoPhaseScore {
    VertexId switch_vertex = kNoVertex;
    StyleIndex style_out = 0;
    StyleIndex style_in = 0;
    BiWeight weight;

    friend bool operator==(const TwoPhaseScore &, const TwoPhaseScore &) = default;
};

struct TwoPhaseRoute {
    TwoPhaseScore score;
    std::vector<EdgeId> leg1; // origin to switch vertex, style_out tree
    std::vector<EdgeId> leg2; // switch vertex to destination, style_in tree

    std::vector<EdgeId> edges() const {
        std::vector<EdgeId> all(leg1);
        all.insert(all.end(), leg2.begin(), leg2.end());
        return all;
    }
};

/// c outbound trees from the origin and c inbound trees into the destination.
struct TwoPhaseTrees {
    VertexId origin = kNoVertex;
    VertexId destination = kNoVertex;
    std::vector<ShortestPathTree> outbound;
    std::vector<ShortestPathTree> inbound;
};

inline void require_prefs(std::span<const PreferencePair> prefs) {
    if (prefs.empty()) {
        throw InvalidArgument("at least one preference pair is required");
    }
    for (const PreferencePair &p : prefs) {
        require_valid(p);
    }
}

inline std::vector<ShortestPathTree> build_trees(const RoadGraph &g, VertexId root,
                                                 std::span<const PreferencePair> prefs,
                                                 Direction direction, SearchStats *stats = nullptr) {
    std::vector<ShortestPathTree> trees;
    trees.reserve(prefs.size());
    for (const PreferencePair &p : prefs) {
        trees.push_back(shortest_tree(g, root, p, direction, TreeAlgorithm::automatic, stats));
    }
    return trees;
}

inline TwoPhaseTrees build_two_phase_trees(const RoadGraph &g, VertexId s, VertexId t,
                                           std::span<const PreferencePair> prefs,
                                           SearchStats *stats = nullptr) {
    require_prefs(prefs);
    if (!g.valid(s) || !g.valid(t)) {
        throw InvalidArgument("origin or destination out of range");
    }
    return {s, t, build_trees(g, s, prefs, Direction::outbound, stats),
            build_trees(g, t, prefs, Direction::inbound, stats)};
}

/// Visits every (v, i, j) combination where outbound tree i and inbound tree j
/// both reach v, in (v, i, j) order. One sweep of c_out * c_in * n combinations.
template <typename Visit>
void for_each_score(std::span<const ShortestPathTree> outbound,
                    std::span<const ShortestPathTree> inbound, Visit &&visit,
                    SearchStats *stats = nullptr) {
    if (outbound.empty() || inbound.empty()) {
        return;
    }
    const std::size_t n = outbound.front().vertex_count();
    for (VertexId v = 0; v < n; ++v) {
        for (StyleIndex i = 0; i < outbound.size(); ++i) {
            const bool out_ok = outbound[i].reached(v);
            for (StyleIndex j = 0; j < inbound.size(); ++j) {
                if (out_ok && inbound[j].reached(v)) {
                    visit(TwoPhaseScore{v, i, j, add_weights(outbound[i].weight(v), inbound[j].weight(v))});
                }
            }
        }
    }
    if (stats) {
        stats->score_evaluations += n * outbound.size() * inbound.size();
    }
}

inline std::vector<TwoPhaseScore> two_phase_scores(const TwoPhaseTrees &trees,
                                                   SearchStats *stats = nullptr) {
    std::vector<TwoPhaseScore> scores;
    for_each_score(trees.outbound, trees.inbound,
                   [&](const TwoPhaseScore &sc) { scores.push_back(sc); }, stats);
    return scores;
}

inline std::vector<TwoPhaseScore> two_phase_scores(const RoadGraph &g, VertexId s, VertexId t,
                                                   std::span<const PreferencePair> prefs,
                                                   SearchStats *stats = nullptr) {
    return two_phase_scores(build_two_phase_trees(g, s, t, prefs, stats), stats);
}

/// Goal-admitted score with minimum time, then energy, then (v, i, j).
inline std::optional<TwoPhaseScore> best_score(std::span<const ShortestPathTree> outbound,
                                               std::span<const ShortestPathTree> inbound,
                                               const QueryGoal &goal, SearchStats *stats = nullptr) {
    std::optional<TwoPhaseScore> best;
    for_each_score(
        outbound, inbound,
        [&](const TwoPhaseScore &sc) {
            if (goal.admits(sc.weight) && (!best || sc.weight < best->weight)) {
                best = sc;
            }
        },
        stats);
    return best;
}

inline TwoPhaseRoute materialize(std::span<const ShortestPathTree> outbound,
                                 std::span<const ShortestPathTree> inbound, const TwoPhaseScore &score) {
    return {score, extract_tree_path(outbound[score.style_out], score.switch_vertex),
            extract_tree_path(inbound[score.style_in], score.switch_vertex)};
}

inline std::optional<TwoPhaseRoute> best_two_phase(const TwoPhaseTrees &trees, const QueryGoal &goal,
                                                   SearchStats *stats = nullptr) {
    if (auto best = best_score(trees.outbound, trees.inbound, goal, stats)) {
        return materialize(trees.outbound, trees.inbound, *best);
    }
    return std::nullopt;
}

/// Fastest goal-satisfying two-phase route. Throws NoFeasibleRoute.
inline TwoPhaseRoute best_two_phase(const RoadGraph &g, VertexId s, VertexId t,
                                    std::span<const PreferencePair> prefs, const QueryGoal &goal,
                                    SearchStats *stats = nullptr) {
    if (auto route = best_two_phase(build_two_phase_trees(g, s, t, prefs, stats), goal, stats)) {
        return std::move(*route);
    }
    throw NoFeasibleRoute("no two-phase route from " + std::to_string(s) + " to " +
                          std::to_string(t) + " meets the goal");
}

inline ParetoSet pareto_of_scores(std::span<const TwoPhaseScore> scores) {
    ParetoSet set;
    for (const TwoPhaseScore &sc : scores) {
        set.insert(sc.weight);
    }
    return set;
}

struct BatteryViolation {
    std::size_t edge_index = 0; // position in the composed route
    VertexId vertex = kNoVertex;
    WattHours energy = 0;       // consumption after that edge, clamped
};

/// Walks the composed route from a full battery with clamping and reports the
/// first prefix whose consumption exceeds capacity. Scores are sum-based, so
/// a goal-admitted route can still dip below empty mid-leg on graphs with
/// negative energies.
inline std::optional<BatteryViolation> validate_route(const RoadGraph &g, std::span<const EdgeId> route,
                                                      WattHours capacity) {
    WattHours used = 0;
    for (std::size_t k = 0; k < route.size(); ++k) {
        const StyledEdge &e = g.edge(route[k]);
        used = std::max<WattHours>(0, detail::checked_add(used, e.weight.energy));
        if (used > capacity) {
            return BatteryViolation{k, e.to, used};
        }
    }
    return std::nullopt;
}

} // namespace evroute

#endif
