#ifndef EVROUTE_CHARGING_HPP
#define EVROUTE_CHARGING_HPP

#include "evroute/graph.hpp"
#include "evroute/two_phase.hpp"
#include "evroute/utility_search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace evroute {

/// Time to add energy to the battery: a constant rate, or a monotone
/// piecewise-linear table of (energy added, seconds) breakpoints.
class ChargeModel {
  public:
    struct Breakpoint {
        double energy_wh = 0.0;
        double seconds = 0.0;
    };

    static ChargeModel linear(double wh_per_second) {
        if (!(wh_per_second > 0.0) || !std::isfinite(wh_per_second)) {
            throw InvalidArgument("charge rate must be positive");
        }
        ChargeModel m;
        m.rate_ = wh_per_second;
        return m;
    }

    static ChargeModel piecewise(std::vector<Breakpoint> points) {
        if (points.empty() || points.front().energy_wh != 0.0) {
            points.insert(points.begin(), Breakpoint{0.0, 0.0});
        }
        if (points.front().seconds != 0.0) {
            throw InvalidArgument("charge table must take zero time at zero energy");
        }
        if (points.size() < 2) {
            throw InvalidArgument("charge table needs at least one positive breakpoint");
        }
        for (std::size_t k = 1; k < points.size(); ++k) {
            if (!(points[k].energy_wh > points[k - 1].energy_wh) ||
                points[k].seconds < points[k - 1].seconds) {
                throw InvalidArgument("charge table must be increasing in energy, non-decreasing in time");
            }
        }
        ChargeModel m;
        m.table_ = std::move(points);
        return m;
    }

    bool is_linear() const noexcept { return table_.empty(); }
    double rate() const noexcept { return rate_; }

    /// Seconds to add `energy` Wh, rounded up. Non-positive energy is free.
    Seconds charge_time(WattHours energy) const {
        if (energy <= 0) {
            return 0;
        }
        const double e = static_cast<double>(energy);
        double seconds = 0.0;
        if (is_linear()) {
            seconds = e / rate_;
        } else {
            // Beyond the last breakpoint the final segment's slope continues.
            std::size_t k = 1;
            while (k + 1 < table_.size() && table_[k].energy_wh < e) {
                ++k;
            }
            const Breakpoint &a = table_[k - 1];
            const Breakpoint &b = table_[k];
            seconds = a.seconds + (e - a.energy_wh) * (b.seconds - a.seconds) / (b.energy_wh - a.energy_wh);
        }
        // Absorb representation error such as 3 / 0.3 = 10.000000000000002.
        return static_cast<Seconds>(std::ceil(seconds - 1e-9 * std::max(1.0, seconds)));
    }

  private:
    double rate_ = 1.0;
    std::vector<Breakpoint> table_;
};

inline Seconds charge_time(WattHours energy, const ChargeModel &model) { return model.charge_time(energy); }

struct SuperEdge {
    VertexId from_station = kNoVertex;
    VertexId to_station = kNoVertex;
    BiWeight leg_weight;
    Seconds charge_seconds = 0; // recharge at to_station; zero when it is the destination
    Seconds duration = 0;       // leg_weight.time + charge_seconds
    TwoPhaseRoute embedded_route;
};

/// Graph over {origin, stations, destination} whose edges are the fastest
/// battery-feasible two-phase legs between them.
struct SuperGraph {
    VertexId origin = kNoVertex;
    VertexId destination = kNoVertex;
    WattHours capacity = 0;
    std::vector<VertexId> nodes; // origin first, destination last
    std::size_t station_count = 0;
    std::vector<SuperEdge> edges;
    std::uint64_t pairs_pruned = 0;
};

/// Builds c outbound trees per node except the destination and c inbound trees
/// per node except the origin, then keeps the best goal-admitted score for every
/// ordered node pair. Pairs where the target is unreachable are skipped.
inline SuperGraph build_super_graph(const RoadGraph &g, std::span<const VertexId> stations, VertexId s,
                                    VertexId t, std::span<const PreferencePair> prefs, WattHours capacity,
                                    const ChargeModel &model, SearchStats *stats = nullptr) {
    require_prefs(prefs);
    if (!g.valid(s) || !g.valid(t)) {
        throw InvalidArgument("origin or destination out of range");
    }
    if (capacity <= 0) {
        throw InvalidArgument("capacity must be positive");
    }
    SuperGraph sg;
    sg.origin = s;
    sg.destination = t;
    sg.capacity = capacity;
    sg.nodes.push_back(s);
    if (s == t) {
        return sg;
    }
    std::vector<VertexId> middle(stations.begin(), stations.end());
    std::sort(middle.begin(), middle.end());
    middle.erase(std::unique(middle.begin(), middle.end()), middle.end());
    for (VertexId z : middle) {
        if (!g.valid(z)) {
            throw InvalidArgument("station vertex out of range");
        }
        if (z != s && z != t) {
            sg.nodes.push_back(z);
        }
    }
    sg.nodes.push_back(t);
    sg.station_count = sg.nodes.size() - 2;

    const std::size_t k = sg.nodes.size();
    std::vector<std::vector<ShortestPathTree>> out(k), in(k);
    for (std::size_t a = 0; a < k; ++a) {
        if (a + 1 != k) {
            out[a] = build_trees(g, sg.nodes[a], prefs, Direction::outbound, stats);
        }
        if (a != 0) {
            in[a] = build_trees(g, sg.nodes[a], prefs, Direction::inbound, stats);
        }
    }

    const QueryGoal goal = QueryGoal::energy_at_most(capacity);
    for (std::size_t a = 0; a + 1 < k; ++a) {
        for (std::size_t b = 1; b < k; ++b) {
            if (a == b) {
                continue;
            }
            const VertexId u = sg.nodes[a];
            const VertexId w = sg.nodes[b];
            if (!out[a].front().reached(w)) {
                ++sg.pairs_pruned;
                continue;
            }
            auto score = best_score(out[a], in[b], goal, stats);
            if (!score) {
                continue;
            }
            SuperEdge edge;
            edge.from_station = u;
            edge.to_station = w;
            edge.leg_weight = score->weight;
            edge.charge_seconds = (b + 1 == k) ? 0 : model.charge_time(score->weight.energy);
            edge.duration = detail::checked_add(score->weight.time, edge.charge_seconds);
            edge.embedded_route = materialize(out[a], in[b], *score);
            sg.edges.push_back(std::move(edge));
        }
    }
    return sg;
}

struct ChargeStop {
    VertexId station = kNoVertex;
    WattHours energy_added = 0;
    Seconds seconds = 0;
};

struct Itinerary {
    std::vector<SuperEdge> legs;
    std::vector<ChargeStop> charge_stops;
    Seconds total_seconds = 0;
    BiWeight driving; // summed leg weights, without charging
};

/// Shortest-duration origin-to-destination sequence in the super graph.
inline Itinerary route_with_chargers(const SuperGraph &sg, VertexId s, VertexId t) {
    if (s != sg.origin || t != sg.destination) {
        throw InvalidArgument("super graph was built for a different origin/destination");
    }
    if (s == t) {
        return {};
    }
    const std::size_t k = sg.nodes.size();
    const auto index_of = [&](VertexId v) {
        return static_cast<std::size_t>(std::find(sg.nodes.begin(), sg.nodes.end(), v) - sg.nodes.begin());
    };
    std::vector<std::vector<std::size_t>> adjacency(k);
    for (std::size_t e = 0; e < sg.edges.size(); ++e) {
        adjacency[index_of(sg.edges[e].from_station)].push_back(e);
    }

    constexpr Seconds kInf = std::numeric_limits<Seconds>::max();
    std::vector<Seconds> dist(k, kInf);
    std::vector<std::size_t> via(k, sg.edges.size());
    using Entry = std::pair<Seconds, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[0] = 0;
    heap.push({0, 0});
    while (!heap.empty()) {
        const auto [d, a] = heap.top();
        heap.pop();
        if (d != dist[a]) {
            continue;
        }
        for (std::size_t e : adjacency[a]) {
            const std::size_t b = index_of(sg.edges[e].to_station);
            const Seconds cand = detail::checked_add(d, sg.edges[e].duration);
            if (cand < dist[b]) {
                dist[b] = cand;
                via[b] = e;
                heap.push({cand, b});
            }
        }
    }
    const std::size_t last = k - 1;
    if (dist[last] == kInf) {
        throw NoFeasibleRoute("destination unreachable through the charging network");
    }

    Itinerary it;
    for (std::size_t b = last; b != 0; b = index_of(sg.edges[via[b]].from_station)) {
        it.legs.push_back(sg.edges[via[b]]);
    }
    std::reverse(it.legs.begin(), it.legs.end());
    for (const SuperEdge &leg : it.legs) {
        it.driving += leg.leg_weight;
        if (leg.to_station != t) {
            it.charge_stops.push_back({leg.to_station, std::max<WattHours>(0, leg.leg_weight.energy),
                                       leg.charge_seconds});
        }
    }
    it.total_seconds = dist[last];
    return it;
}

} // namespace evroute

#endif
