#ifndef EVROUTE_PATH_ORACLE_HPP
#define EVROUTE_PATH_ORACLE_HPP

#include "evroute/graph.hpp"
#include "evroute/pareto_labeling.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace evroute {

// Exhaustive walk enumeration. Independent of the labeling search: no
// dominance pruning, only the clamp/capacity rules per prefix.

inline constexpr std::uint64_t kDefaultOracleBudget = 50'000'000;

namespace detail {

class WalkEnumerator {
  public:
    WalkEnumerator(const RoadGraph &g, std::size_t max_edges, const ParetoConfig &cfg,
                   std::uint64_t budget)
        : g_{g}, max_edges_{max_edges}, cfg_{cfg}, budget_{budget}, found_(g.vertex_count()) {}

    void run(VertexId s) { visit(s, BiWeight{}, 0); }

    std::vector<std::vector<BiWeight>> take() { return std::move(found_); }

  private:
    void visit(VertexId v, const BiWeight &w, std::size_t depth) {
        if (++visited_ > budget_) {
            throw ExplosionGuard("path enumeration exceeded node budget");
        }
        found_[v].push_back(w);
        if (depth == max_edges_) {
            return;
        }
        for (EdgeId id : g_.out_edges(v)) {
            const StyledEdge &e = g_.edge(id);
            BiWeight next{w.time + e.weight.time, w.energy + e.weight.energy};
            if (cfg_.clamp_energy_at_zero) {
                next.energy = std::max<WattHours>(next.energy, 0);
            }
            if (cfg_.capacity && next.energy > *cfg_.capacity) {
                continue;
            }
            visit(e.to, next, depth + 1);
        }
    }

    const RoadGraph &g_;
    std::size_t max_edges_;
    ParetoConfig cfg_;
    std::uint64_t budget_;
    std::uint64_t visited_ = 0;
    std::vector<std::vector<BiWeight>> found_;
};

} // namespace detail

/// Weights of every s-to-v walk with at most max_edges edges, for all v.
/// Each inner vector is a sorted multiset.
inline std::vector<std::vector<BiWeight>>
enumerate_walks_all_targets(const RoadGraph &g, VertexId s, std::size_t max_edges,
                            const ParetoConfig &cfg = {},
                            std::uint64_t budget = kDefaultOracleBudget) {
    detail::WalkEnumerator walker(g, max_edges, cfg, budget);
    walker.run(s);
    auto found = walker.take();
    for (auto &weights : found) {
        std::sort(weights.begin(), weights.end());
    }
    return found;
}

/// Sorted multiset of weights of all s-to-t walks with at most max_edges edges.
inline std::vector<BiWeight> enumerate_paths_oracle(const RoadGraph &g, VertexId s, VertexId t,
                                                    std::size_t max_edges,
                                                    const ParetoConfig &cfg = {},
                                                    std::uint64_t budget = kDefaultOracleBudget) {
    return std::move(enumerate_walks_all_targets(g, s, max_edges, cfg, budget)[t]);
}

} // namespace evroute

#endif
