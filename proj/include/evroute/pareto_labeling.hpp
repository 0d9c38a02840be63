#ifndef EVROUTE_PARETO_LABELING_HPP
#define EVROUTE_PARETO_LABELING_HPP

#include "evroute/graph.hpp"
#include "evroute/pareto_set.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace evroute {

using LabelId = std::uint32_t;
inline constexpr LabelId kNoLabel = std::numeric_limits<LabelId>::max();

struct ParetoConfig {
    std::optional<WattHours> capacity;
    bool clamp_energy_at_zero = false;
    // Largest number of edges a label path may have before the search is
    // declared divergent. Absent: n without capacity, n*(C+1) with it.
    std::optional<std::uint64_t> max_relaxation_rounds;

    static ParetoConfig ev(WattHours capacity) { return {capacity, true, std::nullopt}; }
};

struct Label {
    BiWeight weight;
    VertexId vertex = kNoVertex;
    EdgeId via_edge = kNoEdge;
    LabelId parent = kNoLabel;
    std::uint64_t edge_count = 0;
    bool alive = true;
};

/// Pareto labels of every vertex reachable from one source. Dominated labels
/// stay in the arena (dead) so predecessor chains of survivors stay intact.
class LabelTable {
  public:
    LabelTable(std::size_t vertex_count, VertexId source) : source_{source}, fronts_(vertex_count) {}

    VertexId source() const noexcept { return source_; }
    std::size_t vertex_count() const noexcept { return fronts_.size(); }

    std::span<const LabelId> labels_at(VertexId v) const { return fronts_[v]; }
    const Label &label(LabelId id) const { return arena_[id]; }
    std::size_t labels_created() const noexcept { return arena_.size(); }
    std::uint64_t relaxations() const noexcept { return relaxations_; }

    bool reachable(VertexId v) const { return !fronts_[v].empty(); }

    /// Frontier at v sorted by time ascending.
    std::vector<BiWeight> frontier(VertexId v) const {
        std::vector<BiWeight> out;
        out.reserve(fronts_[v].size());
        for (LabelId id : fronts_[v]) {
            out.push_back(arena_[id].weight);
        }
        return out;
    }

    ParetoSet frontier_set(VertexId v) const { return pareto_filter(frontier(v)); }

    /// Edges from the source to the label's vertex.
    std::vector<EdgeId> path_edges(LabelId id) const {
        std::vector<EdgeId> path;
        for (LabelId cur = id; arena_[cur].parent != kNoLabel; cur = arena_[cur].parent) {
            path.push_back(arena_[cur].via_edge);
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

  private:
    friend LabelTable pareto_frontier(const RoadGraph &, VertexId, const ParetoConfig &);

    VertexId source_;
    std::vector<std::vector<LabelId>> fronts_;
    std::vector<Label> arena_;
    std::uint64_t relaxations_ = 0;
};

/// Applies one edge to a label weight under the config's battery semantics.
/// Returns nullopt when the result exceeds capacity.
inline std::optional<BiWeight> extend_label(const BiWeight &label, const BiWeight &edge,
                                            const ParetoConfig &cfg) {
    BiWeight next = add_weights(label, edge);
    if (cfg.clamp_energy_at_zero && next.energy < 0) {
        next.energy = 0;
    }
    if (cfg.capacity && next.energy > *cfg.capacity) {
        return std::nullopt;
    }
    return next;
}

/// Exact vertex-labeling fixpoint. Labels are processed in creation order,
/// which is FIFO by path edge count, until no label changes.
inline LabelTable pareto_frontier(const RoadGraph &g, VertexId s, const ParetoConfig &cfg) {
    if (!g.valid(s)) {
        throw InvalidArgument("source vertex out of range");
    }
    if (cfg.capacity && *cfg.capacity <= 0) {
        throw InvalidArgument("capacity must be positive");
    }
    const std::uint64_t n = g.vertex_count();
    const std::uint64_t guard =
        cfg.max_relaxation_rounds.value_or(cfg.capacity ? n * (static_cast<std::uint64_t>(*cfg.capacity) + 1) : n);

    LabelTable table(g.vertex_count(), s);
    auto &arena = table.arena_;
    auto &fronts = table.fronts_;
    const auto weight_of = [&arena](LabelId id) { return arena[id].weight; };

    arena.push_back(Label{{0, 0}, s, kNoEdge, kNoLabel, 0, true});
    fronts[s].push_back(0);

    std::vector<LabelId> removed;
    for (LabelId current = 0; current < arena.size(); ++current) {
        if (!arena[current].alive) {
            continue;
        }
        const Label from = arena[current];
        for (EdgeId eid : g.out_edges(from.vertex)) {
            const StyledEdge &e = g.edge(eid);
            ++table.relaxations_;
            const auto next = extend_label(from.weight, e.weight, cfg);
            if (!next) {
                continue;
            }
            if (arena.size() >= kNoLabel) {
                throw RoundGuardExceeded("pareto labeling exhausted label ids");
            }
            const LabelId candidate = static_cast<LabelId>(arena.size());
            arena.push_back(Label{*next, e.to, eid, current, from.edge_count + 1, true});
            removed.clear();
            if (!detail::frontier_insert(fronts[e.to], candidate, weight_of, &removed)) {
                arena.pop_back();
                continue;
            }
            if (from.edge_count + 1 > guard) {
                throw RoundGuardExceeded("pareto labeling exceeded " + std::to_string(guard) +
                                         " relaxation rounds");
            }
            for (LabelId dead : removed) {
                arena[dead].alive = false;
            }
        }
    }
    return table;
}

inline LabelTable ev_pareto_frontier(const RoadGraph &g, VertexId s, WattHours capacity) {
    return pareto_frontier(g, s, ParetoConfig::ev(capacity));
}

/// Minimum-time stored pair at t meeting the goal.
inline std::optional<BiWeight> feasible(const LabelTable &table, VertexId t, const QueryGoal &goal) {
    for (LabelId id : table.labels_at(t)) {
        const BiWeight &w = table.label(id).weight;
        if (goal.admits(w)) {
            return w;
        }
    }
    return std::nullopt;
}

/// Label id of the minimum-time pair at t meeting the goal.
inline std::optional<LabelId> feasible_label(const LabelTable &table, VertexId t, const QueryGoal &goal) {
    for (LabelId id : table.labels_at(t)) {
        if (goal.admits(table.label(id).weight)) {
            return id;
        }
    }
    return std::nullopt;
}

/// Re-walks an edge sequence with the config's clamp/capacity semantics.
/// nullopt when some prefix exceeds capacity.
inline std::optional<BiWeight> replay_path(const RoadGraph &g, std::span<const EdgeId> path,
                                           const ParetoConfig &cfg) {
    BiWeight w;
    for (EdgeId id : path) {
        auto next = extend_label(w, g.edge(id).weight, cfg);
        if (!next) {
            return std::nullopt;
        }
        w = *next;
    }
    return w;
}

} // namespace evroute

#endif
