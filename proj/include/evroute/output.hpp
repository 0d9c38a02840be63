#ifndef EVROUTE_OUTPUT_HPP
#define EVROUTE_OUTPUT_HPP

#include "evroute/charging.hpp"
#include "evroute/experiment.hpp"
#include "evroute/two_phase.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace evroute {

// Route printing. Vertex ids are printed 1-based, matching the input files.

/// A drivable plan: legs between stops, each a two-phase route.
struct RoutePlan {
    struct Leg {
        VertexId from = kNoVertex;
        VertexId to = kNoVertex;
        TwoPhaseRoute route;
        std::optional<ChargeStop> charge_after;
    };
    std::vector<Leg> legs;
    BiWeight driving;
    Seconds charging_seconds = 0;
    Seconds total_seconds = 0;
    std::optional<BatteryViolation> violation; // first prefix battery violation, if any
};

inline RoutePlan plan_from_route(const RoadGraph &g, VertexId s, VertexId t, TwoPhaseRoute route,
                                 std::optional<WattHours> capacity) {
    RoutePlan plan;
    plan.driving = route.score.weight;
    plan.total_seconds = route.score.weight.time;
    if (capacity) {
        plan.violation = validate_route(g, route.edges(), *capacity);
    }
    plan.legs.push_back({s, t, std::move(route), std::nullopt});
    return plan;
}

inline RoutePlan plan_from_itinerary(const RoadGraph &g, const Itinerary &it, WattHours capacity) {
    RoutePlan plan;
    for (const SuperEdge &leg : it.legs) {
        std::optional<ChargeStop> stop;
        for (const ChargeStop &cs : it.charge_stops) {
            if (cs.station == leg.to_station) {
                stop = cs;
            }
        }
        if (!plan.violation) {
            plan.violation = validate_route(g, leg.embedded_route.edges(), capacity);
        }
        plan.legs.push_back({leg.from_station, leg.to_station, leg.embedded_route, stop});
        plan.charging_seconds += stop ? stop->seconds : 0;
    }
    plan.driving = it.driving;
    plan.total_seconds = it.total_seconds;
    return plan;
}

namespace detail {

inline std::string style_name(const std::vector<std::string> &names, StyleIndex i) {
    return i < names.size() ? names[i] : "style" + std::to_string(i);
}

inline std::vector<VertexId> vertex_sequence(const RoadGraph &g, VertexId start, const std::vector<EdgeId> &edges) {
    std::vector<VertexId> seq{start};
    for (EdgeId e : edges) {
        seq.push_back(g.edge(e).to);
    }
    return seq;
}

inline std::string join_vertices(const std::vector<VertexId> &seq) {
    std::string out;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        out += (k ? " " : "") + std::to_string(seq[k] + 1);
    }
    return out;
}

} // namespace detail

enum class OutputFormat { text, csv, json_lines };

inline void write_plan(std::ostream &out, const RoadGraph &g, const RoutePlan &plan,
                       const std::vector<std::string> &style_names, OutputFormat format) {
    using detail::style_name;
    const auto phase1 = [&](const RoutePlan::Leg &leg) {
        return detail::vertex_sequence(g, leg.from, leg.route.leg1);
    };
    const auto phase2 = [&](const RoutePlan::Leg &leg) {
        return detail::vertex_sequence(g, leg.route.score.switch_vertex, leg.route.leg2);
    };

    switch (format) {
    case OutputFormat::text: {
        for (std::size_t k = 0; k < plan.legs.size(); ++k) {
            const auto &leg = plan.legs[k];
            const auto &sc = leg.route.score;
            out << "leg " << k + 1 << ": " << leg.from + 1 << " -> " << leg.to + 1 << "  (" << sc.weight.time
                << " s, " << sc.weight.energy << " Wh)\n";
            out << "  " << style_name(style_names, sc.style_out) << ": " << detail::join_vertices(phase1(leg))
                << '\n';
            out << "  switch at " << sc.switch_vertex + 1 << '\n';
            out << "  " << style_name(style_names, sc.style_in) << ": " << detail::join_vertices(phase2(leg))
                << '\n';
            if (leg.charge_after) {
                out << "charge at " << leg.charge_after->station + 1 << ": +" << leg.charge_after->energy_added
                    << " Wh, " << leg.charge_after->seconds << " s\n";
            }
        }
        out << "total: " << plan.total_seconds << " s (driving " << plan.driving.time << " s, "
            << plan.driving.energy << " Wh; charging " << plan.charging_seconds << " s)\n";
        if (plan.violation) {
            out << "warning: battery exceeds capacity after edge " << plan.violation->edge_index + 1 << " at vertex "
                << plan.violation->vertex + 1 << " (" << plan.violation->energy << " Wh used)\n";
        }
        break;
    }
    case OutputFormat::csv: {
        out << "leg,from,to,style_out,switch,style_in,time_s,energy_wh,charge_s,phase1,phase2\n";
        for (std::size_t k = 0; k < plan.legs.size(); ++k) {
            const auto &leg = plan.legs[k];
            const auto &sc = leg.route.score;
            out << k + 1 << ',' << leg.from + 1 << ',' << leg.to + 1 << ',' << style_name(style_names, sc.style_out)
                << ',' << sc.switch_vertex + 1 << ',' << style_name(style_names, sc.style_in) << ','
                << sc.weight.time << ',' << sc.weight.energy << ','
                << (leg.charge_after ? leg.charge_after->seconds : 0) << ',' << detail::join_vertices(phase1(leg))
                << ',' << detail::join_vertices(phase2(leg)) << '\n';
        }
        out << "total,,,,,," << plan.driving.time << ',' << plan.driving.energy << ',' << plan.charging_seconds
            << ",," << '\n';
        break;
    }
    case OutputFormat::json_lines: {
        const auto ids = [](const std::vector<VertexId> &seq) {
            std::vector<VertexId> out;
            for (VertexId v : seq) {
                out.push_back(v + 1);
            }
            return out;
        };
        for (std::size_t k = 0; k < plan.legs.size(); ++k) {
            const auto &leg = plan.legs[k];
            const auto &sc = leg.route.score;
            nlohmann::ordered_json j;
            j["type"] = "leg";
            j["leg"] = k + 1;
            j["from"] = leg.from + 1;
            j["to"] = leg.to + 1;
            j["style_out"] = style_name(style_names, sc.style_out);
            j["switch"] = sc.switch_vertex + 1;
            j["style_in"] = style_name(style_names, sc.style_in);
            j["time_s"] = sc.weight.time;
            j["energy_wh"] = sc.weight.energy;
            j["phase1"] = ids(phase1(leg));
            j["phase2"] = ids(phase2(leg));
            if (leg.charge_after) {
                j["charge"] = {{"station", leg.charge_after->station + 1},
                               {"energy_wh", leg.charge_after->energy_added},
                               {"seconds", leg.charge_after->seconds}};
            }
            out << j.dump() << '\n';
        }
        nlohmann::ordered_json total;
        total["type"] = "total";
        total["total_s"] = plan.total_seconds;
        total["driving_s"] = plan.driving.time;
        total["energy_wh"] = plan.driving.energy;
        total["charging_s"] = plan.charging_seconds;
        if (plan.violation) {
            total["battery_violation_vertex"] = plan.violation->vertex + 1;
        }
        out << total.dump() << '\n';
        break;
    }
    }
}

inline void write_frontier(std::ostream &out, const std::vector<BiWeight> &frontier, OutputFormat format) {
    switch (format) {
    case OutputFormat::text:
        for (const BiWeight &w : frontier) {
            out << w.time << " s, " << w.energy << " Wh\n";
        }
        break;
    case OutputFormat::csv:
        out << "time_s,energy_wh\n";
        for (const BiWeight &w : frontier) {
            out << w.time << ',' << w.energy << '\n';
        }
        break;
    case OutputFormat::json_lines:
        for (const BiWeight &w : frontier) {
            out << nlohmann::ordered_json{{"time_s", w.time}, {"energy_wh", w.energy}}.dump() << '\n';
        }
        break;
    }
}

} // namespace evroute

#endif
