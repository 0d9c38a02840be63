// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "fixtures.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace evroute;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
    bool pass = false;
    std::string detail;
};

// Every simple s-v path by DFS; independent of the labeling code.
void simple_paths(const RoadGraph &g, VertexId v, BiWeight w, std::vector<std::uint8_t> &on_path,
                  std::vector<std::vector<BiWeight>> &found) {
    found[v].push_back(w);
    on_path[v] = 1;
    for (EdgeId id : g.out_edges(v)) {
        const StyledEdge &e = g.edge(id);
        if (!on_path[e.to]) {
            simple_paths(g, e.to, {w.time + e.weight.time, w.energy + e.weight.energy}, on_path, found);
        }
    }
    on_path[v] = 0;
}

Verdict oracle_exactness() {
    const auto start = Clock::now();
    std::size_t graphs = 0, vertices = 0;
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        Rng rng(seed * 7919);
        const auto n = static_cast<std::size_t>(rng.uniform(2, 12));
        const auto m = static_cast<std::size_t>(rng.uniform(1, 30));
        const RoadGraph g = gen_random_bigraph(n, m, 0, 20, seed, seed % 3 == 0, 2);
        const LabelTable table = pareto_frontier(g, 0, {});
        std::vector<std::vector<BiWeight>> found(n);
        std::vector<std::uint8_t> on_path(n, 0);
        simple_paths(g, 0, {}, on_path, found);
        for (VertexId v = 0; v < n; ++v) {
            if (table.frontier(v) != testing::brute_force_frontier(found[v])) {
                return {false, "mismatch at seed " + std::to_string(seed) + " vertex " + std::to_string(v)};
            }
            ++vertices;
        }
        ++graphs;
    }
    const double elapsed = seconds_since(start);
    return {elapsed < 10.0, std::to_string(graphs) + " graphs, " + std::to_string(vertices) +
                                " vertices exact, " + format_fixed(elapsed, 2) + " s (limit 10 s)"};
}

bool equal_split_exists(const std::vector<std::int64_t> &values) {
    std::int64_t total = 0;
    for (auto v : values) {
        total += v;
    }
    for (std::uint32_t mask = 0; mask < (1u << values.size()); ++mask) {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            sum += (mask >> i) & 1u ? values[i] : 0;
        }
        if (2 * sum == total) {
            return true;
        }
    }
    return false;
}

Verdict partition_agreement() {
    Rng rng(2024);
    std::size_t cases = 0, yes = 0;
    for (; cases < 600; ++cases) {
        std::vector<std::int64_t> values(static_cast<std::size_t>(rng.uniform(1, 8)));
        for (auto &v : values) {
            v = rng.uniform(1, 10);
        }
        const PartitionInstance inst = gen_partition_instance(values);
        const bool oracle = feasible(pareto_frontier(inst.graph, inst.source, {}), inst.target, inst.goal).has_value();
        const bool brute = equal_split_exists(values);
        if (oracle != brute) {
            return {false, "disagreement on case " + std::to_string(cases)};
        }
        yes += brute ? 1 : 0;
    }
    return {true, std::to_string(cases) + " multisets agree (" + std::to_string(yes) + " partitionable)"};
}

Verdict hull_limitation() {
    Rng rng(99);
    std::size_t checked = 0;
    bool single_found_8_14 = false;
    for (const RoadGraph &g : {testing::fixture_d1(), testing::fixture_g2()}) {
        const auto hull = testing::lower_left_hull_vertices(enumerate_paths_oracle(g, 0, 2, 2));
        std::vector<PreferencePair> prefs{{1, 0}, {0, 1}};
        const auto defaults = pref_pairs(default_style_prefs());
        prefs.insert(prefs.end(), defaults.begin(), defaults.end());
        while (prefs.size() < 205) {
            const PreferencePair p{rng.unit(), rng.unit()};
            if (p.valid()) {
                prefs.push_back(p);
            }
        }
        for (const PreferencePair &p : prefs) {
            const BiWeight w = shortest_tree(g, 0, p, Direction::outbound).weight(2);
            if (std::find(hull.begin(), hull.end(), w) == hull.end()) {
                std::ostringstream msg;
                msg << "single-phase optimum " << w << " is not a hull vertex";
                return {false, msg.str()};
            }
            single_found_8_14 = single_found_8_14 || w == BiWeight{8, 14};
            ++checked;
        }
    }
    const TwoPhaseRoute route = best_two_phase(testing::fixture_g2(), 0, 2, pref_pairs(default_style_prefs()),
                                               QueryGoal::energy_at_most(14));
    const bool two_phase_ok = route.score.weight == BiWeight{8, 14};
    std::ostringstream msg;
    msg << checked << " single-phase optima on hull vertices; two-phase with Y=14 returns " << route.score.weight
        << "; single preference found (8,14): " << (single_found_8_14 ? "yes" : "no");
    return {two_phase_ok && !single_found_8_14, msg.str()};
}

Verdict grid_quality() {
    const RoadGraph g = gen_grid(30, 30, {}, 30);
    ExperimentConfig cfg;
    cfg.num_targets = 1000;
    cfg.seed = 7;
    // Uniform sweep, 100 Wh apart, covering about 20% to 80% node reachability.
    for (WattHours c = 650; c <= 1650; c += 100) {
        cfg.capacities.push_back(c);
    }
    const auto start = Clock::now();
    const ExperimentReport report = run_experiment(g, cfg);
    const double elapsed = seconds_since(start);

    bool pass = true, any_99 = false;
    double lo = 100.0, hi = 0.0;
    std::ostringstream msg;
    for (const CapacityRow &row : report.rows) {
        const double slowdown = row.mean_slowdown_pct.value_or(0.0);
        msg << "\n    C=" << row.capacity << " Wh: oracle reach " << format_fixed(row.oracle_reachable_pct, 1)
            << "% of nodes, two-phase reaches " << format_fixed(row.two_phase_reachability_pct, 2)
            << "% of oracle-reachable targets, mean slowdown " << format_fixed(slowdown, 2) << "%";
        pass = pass && row.oracle_ran && row.two_phase_reachability_pct >= 95.0 && slowdown <= 5.0;
        any_99 = any_99 || row.two_phase_reachability_pct >= 99.0;
        lo = std::min(lo, row.oracle_reachable_pct);
        hi = std::max(hi, row.oracle_reachable_pct);
    }
    const bool spans = lo <= 25.0 && hi >= 75.0;
    msg << "\n    node reachability spans " << format_fixed(lo, 1) << "%.." << format_fixed(hi, 1)
        << "%, >=99% on some capacity: " << (any_99 ? "yes" : "no") << ", " << format_fixed(elapsed, 1) << " s";
    return {pass && any_99 && spans && elapsed <= 1800.0, msg.str()};
}

std::optional<Seconds> brute_force_duration(const RoadGraph &g, const std::vector<VertexId> &stations, VertexId s,
                                            VertexId t, WattHours capacity, const ChargeModel &model,
                                            const std::vector<PreferencePair> &prefs) {
    const QueryGoal goal = QueryGoal::energy_at_most(capacity);
    const auto leg = [&](VertexId a, VertexId b) -> std::optional<BiWeight> {
        if (auto r = best_two_phase(build_two_phase_trees(g, a, b, prefs), goal)) {
            return r->score.weight;
        }
        return std::nullopt;
    };
    std::vector<VertexId> pool;
    for (VertexId z : stations) {
        if (z != s && z != t) {
            pool.push_back(z);
        }
    }
    std::optional<Seconds> best;
    std::vector<std::uint8_t> used(pool.size(), 0);
    std::function<void(VertexId, Seconds)> extend = [&](VertexId at, Seconds elapsed) {
        if (auto w = leg(at, t)) {
            best = std::min(best.value_or(elapsed + w->time), elapsed + w->time);
        }
        for (std::size_t k = 0; k < pool.size(); ++k) {
            if (!used[k]) {
                if (auto w = leg(at, pool[k])) {
                    used[k] = 1;
                    extend(pool[k], elapsed + w->time + model.charge_time(w->energy));
                    used[k] = 0;
                }
            }
        }
    };
    extend(s, 0);
    return best;
}

Verdict charging_correctness() {
    const auto prefs = pref_pairs(default_style_prefs());
    std::size_t instances = 0, routed = 0, monotone_checks = 0;
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        Rng rng(seed * 31);
        const auto rows = static_cast<std::size_t>(rng.uniform(2, 3));
        const auto cols = static_cast<std::size_t>(rng.uniform(3, 5));
        const RoadGraph g = gen_grid(rows, cols, {}, seed);
        const std::size_t n = g.vertex_count();
        const auto d = static_cast<std::size_t>(rng.uniform(0, 3));
        const auto picks = sample_distinct_vertices(n, d + 2, seed);
        const VertexId s = picks[0], t = picks[1];
        const std::vector<VertexId> stations(picks.begin() + 2, picks.end());
        const WattHours capacity = rng.uniform(200, 2000);
        const auto model = ChargeModel::linear(static_cast<double>(rng.uniform(1, 40)) / 8.0);

        const auto expected = brute_force_duration(g, stations, s, t, capacity, model, prefs);
        std::optional<Seconds> got;
        try {
            got = route_with_chargers(build_super_graph(g, stations, s, t, prefs, capacity, model), s, t).total_seconds;
        } catch (const NoFeasibleRoute &) {
        }
        if (got != expected) {
            return {false, "seed " + std::to_string(seed) + ": super graph " +
                               (got ? std::to_string(*got) : "none") + " vs brute force " +
                               (expected ? std::to_string(*expected) : "none")};
        }
        routed += got ? 1 : 0;
        ++instances;

        // Monotonicity: the same query with one station removed is never better.
        if (!stations.empty()) {
            const std::vector<VertexId> fewer(stations.begin(), stations.end() - 1);
            std::optional<Seconds> before;
            try {
                before = route_with_chargers(build_super_graph(g, fewer, s, t, prefs, capacity, model), s, t)
                             .total_seconds;
            } catch (const NoFeasibleRoute &) {
            }
            if (before && (!got || *got > *before)) {
                return {false, "adding a station hurt at seed " + std::to_string(seed)};
            }
            ++monotone_checks;
        }
    }
    return {true, std::to_string(instances) + " instances match brute force (" + std::to_string(routed) +
                      " routable), " + std::to_string(monotone_checks) + " monotonicity checks"};
}

Verdict performance() {
    const RoadGraph g = build_graph(gen_sparse_grid_network(263, 263, 78'100, {}, 11));
    const auto prefs = pref_pairs(default_style_prefs());
    const auto picks = sample_distinct_vertices(g.vertex_count(), 7, 5);
    const VertexId s = picks[0], t = picks[1];
    const WattHours capacity = 60'000;
    const QueryGoal goal = QueryGoal::energy_at_most(capacity);

    auto start = Clock::now();
    const auto route = best_two_phase(build_two_phase_trees(g, s, t, prefs), goal);
    const double d0 = seconds_since(start);

    const std::vector<VertexId> stations(picks.begin() + 2, picks.end());
    start = Clock::now();
    SearchStats stats;
    const auto sg = build_super_graph(g, stations, s, t, prefs, capacity, ChargeModel::linear(10.0), &stats);
    std::optional<Seconds> total;
    try {
        total = route_with_chargers(sg, s, t).total_seconds;
    } catch (const NoFeasibleRoute &) {
    }
    const double d5 = seconds_since(start);

    std::ostringstream msg;
    msg << "n=" << g.vertex_count() << ", m=" << g.edge_count() << "; d=0 query " << format_fixed(d0, 3)
        << " s (limit 2), d=5 query " << format_fixed(d5, 3) << " s (limit 15, " << stats.tree_builds
        << " trees); routes found: " << (route ? "yes" : "no") << "/" << (total ? "yes" : "no");
    return {d0 <= 2.0 && d5 <= 15.0, msg.str()};
}

std::string route_output(std::uint64_t seed) {
    std::ostringstream file;
    write_network(file, gen_grid_network(12, 12, {}, seed));
    std::istringstream in(file.str());
    const RoadGraph g = load_graph(in);
    const auto prefs = default_style_prefs();
    std::vector<std::string> names;
    for (const auto &p : prefs) {
        names.push_back(p.name);
    }
    const auto picks = sample_distinct_vertices(g.vertex_count(), 5, seed);
    std::ostringstream out;
    for (OutputFormat fmt : {OutputFormat::text, OutputFormat::csv, OutputFormat::json_lines}) {
        const auto route = best_two_phase(g, picks[0], picks[1], pref_pairs(prefs), QueryGoal::energy_at_most(4000));
        write_plan(out, g, plan_from_route(g, picks[0], picks[1], route, 4000), names, fmt);
        const std::vector<VertexId> stations(picks.begin() + 2, picks.end());
        const auto sg = build_super_graph(g, stations, picks[0], picks[1], pref_pairs(prefs), 1500,
                                          ChargeModel::linear(3.0));
        try {
            write_plan(out, g, plan_from_itinerary(g, route_with_chargers(sg, picks[0], picks[1]), 1500), names, fmt);
        } catch (const NoFeasibleRoute &) {
            out << "no route\n";
        }
    }
    return out.str();
}

std::string experiment_csv(std::uint64_t seed) {
    const RoadGraph g = gen_grid(10, 10, {}, seed);
    ExperimentConfig cfg;
    cfg.num_targets = 200;
    cfg.capacities = {1000, 3000};
    cfg.seed = seed;
    std::ostringstream out;
    write_report_csv(out, run_experiment(g, cfg));
    return out.str();
}

Verdict determinism() {
    const std::string r1 = route_output(17), r2 = route_output(17);
    const std::string c1 = experiment_csv(17), c2 = experiment_csv(17);
    const bool pass = r1 == r2 && c1 == c2 && !r1.empty() && !c1.empty();
    return {pass, "route output " + std::to_string(r1.size()) + " bytes " + (r1 == r2 ? "identical" : "DIFFERS") +
                      ", experiment CSV " + std::to_string(c1.size()) + " bytes " +
                      (c1 == c2 ? "identical" : "DIFFERS")};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"oracle exactness", oracle_exactness},
        {"partition reduction agreement", partition_agreement},
        {"convex hull limitation", hull_limitation},
        {"two-phase quality on 30x30 grid", grid_quality},
        {"charging correctness and monotonicity", charging_correctness},
        {"performance smoke", performance},
        {"determinism", determinism},
    };
    int failures = 0;
    for (const auto &[name, check] : criteria) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << name << ": " << v.detail << std::endl;
        failures += v.pass ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
