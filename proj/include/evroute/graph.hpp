#ifndef EVROUTE_GRAPH_HPP
#define EVROUTE_GRAPH_HPP

#include "evroute/errors.hpp"
#include "evroute/weight.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace evroute {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using StyleIndex = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

struct StyledEdge {
    VertexId from = 0;
    VertexId to = 0;
    BiWeight weight;
    StyleIndex style = 0;
    bool is_charger_loop = false;

    friend bool operator==(const StyledEdge &, const StyledEdge &) = default;
};

/// Feasibility bounds. An absent bound is unconstrained.
struct QueryGoal {
    std::optional<Seconds> max_time;
    std::optional<WattHours> max_energy;

    bool admits(const BiWeight &w) const {
        return (!max_time || w.time <= *max_time) && (!max_energy || w.energy <= *max_energy);
    }

    static QueryGoal energy_at_most(WattHours y) { return {std::nullopt, y}; }
};

/// Immutable directed multigraph over dense vertex ids with parallel styled
/// edges. Both outgoing and incoming adjacency are kept in CSR form so
/// inbound searches need no reversed copy.
class RoadGraph {
  public:
    RoadGraph() = default;

    RoadGraph(std::size_t vertex_count, std::vector<StyledEdge> edges,
              std::vector<VertexId> chargers = {}, std::uint32_t style_count = 1)
        : vertex_count_{vertex_count}, edges_{std::move(edges)}, style_count_{style_count} {
        if (vertex_count > std::numeric_limits<VertexId>::max() - 1 ||
            edges_.size() > std::numeric_limits<EdgeId>::max() - 1) {
            throw InvalidArgument("graph too large for 32-bit ids");
        }
        for (const StyledEdge &e : edges_) {
            if (e.from >= vertex_count || e.to >= vertex_count) {
                throw InvalidArgument("edge endpoint out of range");
            }
            if (e.is_charger_loop &&
                (e.from != e.to || e.weight.time <= 0 || e.weight.energy >= 0)) {
                throw InvalidArgument("charger loop must be a self-loop with time > 0, energy < 0");
            }
            if (e.style >= style_count_) {
                style_count_ = e.style + 1;
            }
        }
        std::sort(chargers.begin(), chargers.end());
        chargers.erase(std::unique(chargers.begin(), chargers.end()), chargers.end());
        for (VertexId c : chargers) {
            if (c >= vertex_count) {
                throw InvalidArgument("charger vertex out of range");
            }
        }
        chargers_ = std::move(chargers);
        build_csr(out_offsets_, out_edges_, [](const StyledEdge &e) { return e.from; });
        build_csr(in_offsets_, in_edges_, [](const StyledEdge &e) { return e.to; });
    }

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::uint32_t style_count() const noexcept { return style_count_; }

    const StyledEdge &edge(EdgeId id) const { return edges_[id]; }
    std::span<const StyledEdge> edges() const noexcept { return edges_; }

    std::span<const EdgeId> out_edges(VertexId v) const {
        return {out_edges_.data() + out_offsets_[v], out_edges_.data() + out_offsets_[v + 1]};
    }
    std::span<const EdgeId> in_edges(VertexId v) const {
        return {in_edges_.data() + in_offsets_[v], in_edges_.data() + in_offsets_[v + 1]};
    }

    std::span<const VertexId> chargers() const noexcept { return chargers_; }
    bool is_charger(VertexId v) const {
        return std::binary_search(chargers_.begin(), chargers_.end(), v);
    }

    bool valid(VertexId v) const noexcept { return v < vertex_count_; }

  private:
    template <typename KeyOf>
    void build_csr(std::vector<std::size_t> &offsets, std::vector<EdgeId> &ids, KeyOf key_of) {
        offsets.assign(vertex_count_ + 1, 0);
        for (const StyledEdge &e : edges_) {
            ++offsets[key_of(e) + 1];
        }
        for (std::size_t v = 0; v < vertex_count_; ++v) {
            offsets[v + 1] += offsets[v];
        }
        ids.resize(edges_.size());
        std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
        for (EdgeId id = 0; id < edges_.size(); ++id) {
            ids[cursor[key_of(edges_[id])]++] = id;
        }
    }

    std::size_t vertex_count_ = 0;
    std::vector<StyledEdge> edges_;
    std::vector<VertexId> chargers_;
    std::uint32_t style_count_ = 1;
    std::vector<std::size_t> out_offsets_{0};
    std::vector<EdgeId> out_edges_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<EdgeId> in_edges_;
};

/// Same vertices, chargers and edge ids with every edge reversed.
inline RoadGraph reverse_view(const RoadGraph &g) {
    std::vector<StyledEdge> edges(g.edges().begin(), g.edges().end());
    for (StyledEdge &e : edges) {
        std::swap(e.from, e.to);
    }
    return RoadGraph(g.vertex_count(), std::move(edges),
                     std::vector<VertexId>(g.chargers().begin(), g.chargers().end()),
                     g.style_count());
}

/// Sum of edge weights along an edge sequence.
inline BiWeight path_weight(const RoadGraph &g, std::span<const EdgeId> path) {
    BiWeight total;
    for (EdgeId id : path) {
        total += g.edge(id).weight;
    }
    return total;
}

} // namespace evroute

#endif
