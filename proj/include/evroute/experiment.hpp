#ifndef EVROUTE_EXPERIMENT_HPP
#define EVROUTE_EXPERIMENT_HPP

#include "evroute/charging.hpp"
#include "evroute/ingest.hpp"
#include "evroute/pareto_labeling.hpp"
#include "evroute/two_phase.hpp"

#include <charconv>
#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace evroute {

inline constexpr std::uint64_t kDefaultOracleGuard = 1'000'000'000; // n * C

struct ExperimentConfig {
    std::optional<VertexId> source; // drawn from the seed when absent
    std::size_t num_targets = 1000;
    std::vector<WattHours> capacities;
    std::vector<VertexId> chargers;
    std::uint64_t seed = 1;
    std::vector<PreferencePair> prefs = pref_pairs(default_style_prefs());
    std::optional<ChargeModel> charge_model; // required when chargers are given
    std::uint64_t oracle_guard = kDefaultOracleGuard;
};

struct TargetOutcome {
    VertexId target = kNoVertex;
    std::optional<Seconds> oracle_time;    // absent: unreachable or oracle skipped
    std::optional<Seconds> two_phase_time; // includes charging time when chargers are used
};

/// One row per capacity.
struct CapacityRow {
    WattHours capacity = 0;
    std::size_t chargers = 0;
    std::size_t targets = 0;
    bool oracle_ran = false;
    std::size_t oracle_reachable_nodes = 0;
    double oracle_reachable_pct = 0.0;
    std::size_t oracle_reachable_targets = 0;
    std::size_t two_phase_reached_targets = 0;
    std::size_t both_reached_targets = 0;
    double two_phase_reachability_pct = 0.0;
    std::optional<double> mean_slowdown_pct;
    double mean_query_seconds = 0.0;
    double oracle_seconds = 0.0;
    std::vector<TargetOutcome> outcomes;
};

struct ExperimentReport {
    VertexId source = kNoVertex;
    std::vector<VertexId> targets;
    std::vector<CapacityRow> rows;
};

/// Relative excess of the two-phase time over the optimum, in percent.
inline double slowdown_pct(Seconds two_phase, Seconds optimal) {
    if (optimal > 0) {
        return 100.0 * static_cast<double>(two_phase - optimal) / static_cast<double>(optimal);
    }
    return two_phase == optimal ? 0.0 : 100.0;
}

/// Targets sampled uniformly with replacement over all vertices. Per capacity:
/// one exact labeling run from the source (when n*C is within the guard and no
/// chargers are used) and one end-to-end two-phase query per target.
inline ExperimentReport run_experiment(const RoadGraph &g, const ExperimentConfig &cfg) {
    if (g.vertex_count() == 0) {
        throw InvalidArgument("experiment needs a non-empty graph");
    }
    if (cfg.num_targets == 0) {
        throw InvalidArgument("num_targets must be at least 1");
    }
    if (!cfg.chargers.empty() && !cfg.charge_model) {
        throw InvalidArgument("a charge model is required with chargers");
    }
    require_prefs(cfg.prefs);
    using Clock = std::chrono::steady_clock;
    const auto seconds_since = [](Clock::time_point start) {
        return std::chrono::duration<double>(Clock::now() - start).count();
    };

    Rng rng(cfg.seed);
    const auto last = static_cast<std::int64_t>(g.vertex_count()) - 1;
    ExperimentReport report;
    report.source = cfg.source ? *cfg.source : static_cast<VertexId>(rng.uniform(0, last));
    if (!g.valid(report.source)) {
        throw InvalidArgument("source vertex out of range");
    }
    for (std::size_t k = 0; k < cfg.num_targets; ++k) {
        report.targets.push_back(static_cast<VertexId>(rng.uniform(0, last)));
    }

    for (WattHours capacity : cfg.capacities) {
        if (capacity <= 0) {
            throw InvalidArgument("capacities must be positive");
        }
        CapacityRow row;
        row.capacity = capacity;
        row.chargers = cfg.chargers.size();
        row.targets = report.targets.size();

        std::optional<LabelTable> table;
        const bool oracle_fits = static_cast<double>(g.vertex_count()) * static_cast<double>(capacity) <=
                                 static_cast<double>(cfg.oracle_guard);
        if (cfg.chargers.empty() && oracle_fits) {
            const auto start = Clock::now();
            table = ev_pareto_frontier(g, report.source, capacity);
            row.oracle_seconds = seconds_since(start);
            row.oracle_ran = true;
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                row.oracle_reachable_nodes += table->reachable(v) ? 1 : 0;
            }
            row.oracle_reachable_pct = 100.0 * static_cast<double>(row.oracle_reachable_nodes) /
                                       static_cast<double>(g.vertex_count());
        }

        const QueryGoal goal = QueryGoal::energy_at_most(capacity);
        double query_seconds = 0.0;
        double slowdown_sum = 0.0;
        for (VertexId t : report.targets) {
            TargetOutcome outcome{t, std::nullopt, std::nullopt};
            if (table) {
                if (auto best = feasible(*table, t, goal)) {
                    outcome.oracle_time = best->time;
                }
            }
            const auto start = Clock::now();
            if (cfg.chargers.empty()) {
                if (auto route = best_two_phase(build_two_phase_trees(g, report.source, t, cfg.prefs), goal)) {
                    outcome.two_phase_time = route->score.weight.time;
                }
            } else {
                const SuperGraph sg =
                    build_super_graph(g, cfg.chargers, report.source, t, cfg.prefs, capacity, *cfg.charge_model);
                try {
                    outcome.two_phase_time = route_with_chargers(sg, report.source, t).total_seconds;
                } catch (const NoFeasibleRoute &) {
                }
            }
            query_seconds += seconds_since(start);

            row.oracle_reachable_targets += outcome.oracle_time ? 1 : 0;
            row.two_phase_reached_targets += outcome.two_phase_time ? 1 : 0;
            if (outcome.oracle_time && outcome.two_phase_time) {
                ++row.both_reached_targets;
                slowdown_sum += slowdown_pct(*outcome.two_phase_time, *outcome.oracle_time);
            }
            row.outcomes.push_back(outcome);
        }
        const std::size_t denominator = row.oracle_ran ? row.oracle_reachable_targets : row.targets;
        row.two_phase_reachability_pct =
            denominator == 0 ? 100.0
                             : 100.0 * static_cast<double>(row.oracle_ran ? row.both_reached_targets
                                                                          : row.two_phase_reached_targets) /
                                   static_cast<double>(denominator);
        if (row.oracle_ran && row.both_reached_targets > 0) {
            row.mean_slowdown_pct = slowdown_sum / static_cast<double>(row.both_reached_targets);
        }
        row.mean_query_seconds = query_seconds / static_cast<double>(row.targets);
        report.rows.push_back(std::move(row));
    }
    return report;
}

/// Locale-independent fixed-point formatting.
inline std::string format_fixed(double value, int precision) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, precision);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

/// CSV with a fixed header. Oracle columns are blank when the oracle was
/// skipped. Timing columns only appear with include_timing, since they are
/// the one non-deterministic part of a report.
inline void write_report_csv(std::ostream &out, const ExperimentReport &report, bool include_timing = false) {
    out << "capacity_wh,chargers,source,targets,oracle_reachable_nodes,oracle_reachable_pct,"
           "oracle_reachable_targets,two_phase_reached_targets,two_phase_reachability_pct,mean_slowdown_pct";
    if (include_timing) {
        out << ",mean_query_seconds,oracle_seconds";
    }
    out << '\n';
    for (const CapacityRow &row : report.rows) {
        out << row.capacity << ',' << row.chargers << ',' << report.source + 1 << ',' << row.targets << ',';
        if (row.oracle_ran) {
            out << row.oracle_reachable_nodes << ',' << format_fixed(row.oracle_reachable_pct, 2) << ','
                << row.oracle_reachable_targets << ',';
        } else {
            out << ",,,";
        }
        out << row.two_phase_reached_targets << ',' << format_fixed(row.two_phase_reachability_pct, 2) << ',';
        if (row.mean_slowdown_pct) {
            out << format_fixed(*row.mean_slowdown_pct, 2);
        }
        if (include_timing) {
            out << ',' << format_fixed(row.mean_query_seconds, 6) << ',';
            if (row.oracle_ran) {
                out << format_fixed(row.oracle_seconds, 6);
            }
        }
        out << '\n';
    }
}

} // namespace evroute

#endif
