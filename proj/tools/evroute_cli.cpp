// evroute: route planning and experiments for range-limited electric vehicles.

#include "evroute/evroute.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kInputError = 2,
    kNoFeasibleRoute = 3,
    kGuardExceeded = 4,
};

struct CommonOptions {
    std::string graph;
    std::string params;
    std::string chargers;
    std::string format = "text";
    std::optional<double> charge_rate;
};

evroute::OutputFormat parse_format(const std::string &name) {
    if (name == "text") {
        return evroute::OutputFormat::text;
    }
    if (name == "csv") {
        return evroute::OutputFormat::csv;
    }
    return evroute::OutputFormat::json_lines;
}

evroute::EngineParams load_engine_params(const CommonOptions &opts) {
    return opts.params.empty() ? evroute::EngineParams{} : evroute::load_params(opts.params);
}

std::vector<std::string> style_names(const evroute::EngineParams &params) {
    std::vector<std::string> names;
    for (const auto &p : params.prefs) {
        names.push_back(p.name);
    }
    return names;
}

evroute::VertexId to_vertex(std::uint64_t one_based, const evroute::RoadGraph &g, const char *what) {
    if (one_based < 1 || one_based > g.vertex_count()) {
        throw evroute::InvalidArgument(std::string(what) + " must be in [1, " + std::to_string(g.vertex_count()) +
                                       "]");
    }
    return static_cast<evroute::VertexId>(one_based - 1);
}

std::optional<evroute::ChargeModel> charge_model(const CommonOptions &opts, const evroute::EngineParams &params) {
    if (opts.charge_rate) {
        return evroute::ChargeModel::linear(*opts.charge_rate);
    }
    if (params.charge_rate_wh_per_s) {
        return evroute::ChargeModel::linear(*params.charge_rate_wh_per_s);
    }
    return std::nullopt;
}

struct RouteOptions {
    std::uint64_t source = 0;
    std::uint64_t target = 0;
    evroute::WattHours capacity = 0;
    std::optional<evroute::Seconds> max_time;
    std::optional<evroute::WattHours> max_energy;
};

int cmd_route(const CommonOptions &common, const RouteOptions &opts) {
    using namespace evroute;
    const EngineParams params = load_engine_params(common);
    const RoadGraph g = load_graph(common.graph, params.driving);
    const VertexId s = to_vertex(opts.source, g, "--source");
    const VertexId t = to_vertex(opts.target, g, "--target");
    const auto prefs = pref_pairs(params.prefs);

    RoutePlan plan;
    if (common.chargers.empty()) {
        const QueryGoal goal{opts.max_time, opts.max_energy.value_or(opts.capacity)};
        plan = plan_from_route(g, s, t, best_two_phase(g, s, t, prefs, goal), opts.capacity);
    } else {
        const auto model = charge_model(common, params);
        if (!model) {
            throw InvalidArgument("--chargers needs --charge-rate or charge.rate_wh_per_s in --params");
        }
        const auto stations = load_chargers(common.chargers, g.vertex_count());
        const SuperGraph sg = build_super_graph(g, stations, s, t, prefs, opts.capacity, *model);
        plan = plan_from_itinerary(g, route_with_chargers(sg, s, t), opts.capacity);
        if (opts.max_time && plan.total_seconds > *opts.max_time) {
            throw NoFeasibleRoute("fastest itinerary takes " + std::to_string(plan.total_seconds) +
                                  " s, above --max-time");
        }
    }
    write_plan(std::cout, g, plan, style_names(params), parse_format(common.format));
    return kOk;
}

int cmd_pareto(const CommonOptions &common, std::uint64_t source, std::uint64_t target,
               evroute::WattHours capacity, std::uint64_t guard) {
    using namespace evroute;
    const EngineParams params = load_engine_params(common);
    const RoadGraph g = load_graph(common.graph, params.driving);
    const VertexId s = to_vertex(source, g, "--source");
    const VertexId t = to_vertex(target, g, "--target");
    if (static_cast<double>(g.vertex_count()) * static_cast<double>(capacity) > static_cast<double>(guard)) {
        throw GuardExceeded("n * capacity = " + std::to_string(g.vertex_count() * capacity) +
                            " exceeds --guard " + std::to_string(guard) +
                            "; lower the capacity, use a smaller graph, or raise --guard");
    }
    const LabelTable table = ev_pareto_frontier(g, s, capacity);
    write_frontier(std::cout, table.frontier(t), parse_format(common.format));
    return kOk;
}

struct ExperimentOptions {
    std::optional<std::uint64_t> source;
    std::size_t targets = 1000;
    std::vector<evroute::WattHours> capacities;
    std::uint64_t seed = 1;
    std::uint64_t guard = evroute::kDefaultOracleGuard;
    bool timing = false;
    std::string output;
};

int cmd_experiment(const CommonOptions &common, const ExperimentOptions &opts) {
    using namespace evroute;
    const EngineParams params = load_engine_params(common);
    const RoadGraph g = load_graph(common.graph, params.driving);
    ExperimentConfig cfg;
    if (opts.source) {
        cfg.source = to_vertex(*opts.source, g, "--source");
    }
    cfg.num_targets = opts.targets;
    cfg.capacities = opts.capacities;
    cfg.seed = opts.seed;
    cfg.prefs = pref_pairs(params.prefs);
    cfg.oracle_guard = opts.guard;
    if (!common.chargers.empty()) {
        cfg.chargers = load_chargers(common.chargers, g.vertex_count());
        cfg.charge_model = charge_model(common, params);
        if (!cfg.charge_model) {
            throw InvalidArgument("--chargers needs --charge-rate or charge.rate_wh_per_s in --params");
        }
    }
    const ExperimentReport report = run_experiment(g, cfg);
    if (opts.output.empty()) {
        write_report_csv(std::cout, report, opts.timing);
    } else {
        std::ofstream out(opts.output);
        if (!out) {
            throw InvalidArgument("cannot write '" + opts.output + "'");
        }
        write_report_csv(out, report, opts.timing);
    }
    return kOk;
}

struct GenOptions {
    std::string kind;
    std::size_t rows = 10;
    std::size_t cols = 10;
    std::size_t segments = 0;
    std::uint64_t seed = 1;
    std::vector<double> mix;
    std::size_t count = 1;
    std::vector<std::int64_t> values;
    std::string graph;
    std::string output;
};

int cmd_gen(const GenOptions &opts) {
    using namespace evroute;
    std::ofstream file;
    if (!opts.output.empty()) {
        file.open(opts.output);
        if (!file) {
            throw InvalidArgument("cannot write '" + opts.output + "'");
        }
    }
    std::ostream &out = opts.output.empty() ? std::cout : file;
    ClassMix mix;
    if (!opts.mix.empty()) {
        if (opts.mix.size() != kRoadClassCount) {
            throw InvalidArgument("--mix takes four weights: highway,primary,secondary,local");
        }
        std::copy(opts.mix.begin(), opts.mix.end(), mix.weights.begin());
    }
    if (opts.kind == "grid") {
        out << "c grid " << opts.rows << 'x' << opts.cols << " seed " << opts.seed << '\n';
        write_network(out, gen_grid_network(opts.rows, opts.cols, mix, opts.seed));
    } else if (opts.kind == "sparse") {
        out << "c sparse grid " << opts.rows << 'x' << opts.cols << " seed " << opts.seed << '\n';
        write_network(out, gen_sparse_grid_network(opts.rows, opts.cols, opts.segments, mix, opts.seed));
    } else if (opts.kind == "chargers") {
        if (opts.graph.empty()) {
            throw InvalidArgument("gen chargers needs --graph");
        }
        const RoadGraph g = load_graph(opts.graph);
        out << "# " << opts.count << " stations, seed " << opts.seed << '\n';
        write_chargers(out, sample_distinct_vertices(g.vertex_count(), opts.count, opts.seed));
    } else {
        const PartitionInstance inst = gen_partition_instance(opts.values);
        out << "c partition instance: source 1, target " << inst.target + 1 << ", goal max-time "
            << *inst.goal.max_time << " max-energy " << *inst.goal.max_energy << '\n';
        NetworkFile net;
        net.kind = NetworkFile::Kind::bicriterion;
        net.vertex_count = inst.graph.vertex_count();
        net.arcs.assign(inst.graph.edges().begin(), inst.graph.edges().end());
        write_network(out, net);
    }
    return kOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Two-phase bicriterion route planning for electric vehicles"};
    app.require_subcommand(1);

    CommonOptions common;
    const std::vector<std::string> formats{"text", "csv", "json-lines"};

    RouteOptions route_opts;
    auto *route = app.add_subcommand("route", "Fastest battery-feasible two-phase route");
    route->add_option("--graph", common.graph, "Graph file")->required()->check(CLI::ExistingFile);
    route->add_option("--params", common.params, "Parameter overrides (key=value)")->check(CLI::ExistingFile);
    route->add_option("--chargers", common.chargers, "Charging station list")->check(CLI::ExistingFile);
    route->add_option("--charge-rate", common.charge_rate, "Charging rate in Wh per second");
    route->add_option("--source", route_opts.source, "Origin vertex (1-based)")->required();
    route->add_option("--target", route_opts.target, "Destination vertex (1-based)")->required();
    route->add_option("--capacity", route_opts.capacity, "Battery capacity in Wh")->required()->check(CLI::PositiveNumber);
    route->add_option("--max-time", route_opts.max_time, "Upper bound on total seconds");
    route->add_option("--max-energy", route_opts.max_energy, "Upper bound on consumed Wh (default: capacity)");
    route->add_option("--format", common.format, "text, csv or json-lines")->check(CLI::IsMember(formats));

    std::uint64_t p_source = 0, p_target = 0, p_guard = evroute::kDefaultOracleGuard;
    evroute::WattHours p_capacity = 0;
    auto *pareto = app.add_subcommand("pareto", "Exact battery-constrained Pareto frontier at the target");
    pareto->add_option("--graph", common.graph, "Graph file")->required()->check(CLI::ExistingFile);
    pareto->add_option("--params", common.params, "Parameter overrides (key=value)")->check(CLI::ExistingFile);
    pareto->add_option("--source", p_source, "Origin vertex (1-based)")->required();
    pareto->add_option("--target", p_target, "Destination vertex (1-based)")->required();
    pareto->add_option("--capacity", p_capacity, "Battery capacity in Wh")->required()->check(CLI::PositiveNumber);
    pareto->add_option("--guard", p_guard, "Refuse when n * capacity exceeds this");
    pareto->add_option("--format", common.format, "text, csv or json-lines")->check(CLI::IsMember(formats));

    ExperimentOptions exp_opts;
    auto *experiment = app.add_subcommand("experiment", "Reachability and slowdown versus the exact oracle (CSV)");
    experiment->add_option("--graph", common.graph, "Graph file")->required()->check(CLI::ExistingFile);
    experiment->add_option("--params", common.params, "Parameter overrides (key=value)")->check(CLI::ExistingFile);
    experiment->add_option("--chargers", common.chargers, "Charging station list")->check(CLI::ExistingFile);
    experiment->add_option("--charge-rate", common.charge_rate, "Charging rate in Wh per second");
    experiment->add_option("--source", exp_opts.source, "Origin vertex (1-based); drawn from the seed if absent");
    experiment->add_option("--targets", exp_opts.targets, "Number of sampled destinations")->check(CLI::PositiveNumber);
    experiment->add_option("--capacity", exp_opts.capacities, "Capacities in Wh, comma separated")
        ->required()
        ->delimiter(',');
    experiment->add_option("--seed", exp_opts.seed, "Sampling seed");
    experiment->add_option("--guard", exp_opts.guard, "Skip the oracle when n * capacity exceeds this");
    experiment->add_flag("--timing", exp_opts.timing, "Add wall-clock columns (not deterministic)");
    experiment->add_option("--output", exp_opts.output, "Write CSV here instead of stdout");

    GenOptions gen_opts;
    auto *gen = app.add_subcommand("gen", "Instance generators");
    gen->add_option("kind", gen_opts.kind, "grid, sparse, chargers or partition")
        ->required()
        ->check(CLI::IsMember({"grid", "sparse", "chargers", "partition"}));
    gen->add_option("--rows", gen_opts.rows, "Grid rows")->check(CLI::PositiveNumber);
    gen->add_option("--cols", gen_opts.cols, "Grid columns")->check(CLI::PositiveNumber);
    gen->add_option("--segments", gen_opts.segments, "Segment count for sparse grids");
    gen->add_option("--seed", gen_opts.seed, "Generator seed");
    gen->add_option("--mix", gen_opts.mix, "Class weights highway,primary,secondary,local")->delimiter(',');
    gen->add_option("--count", gen_opts.count, "Number of charging stations");
    gen->add_option("--values", gen_opts.values, "Partition values, comma separated")->delimiter(',');
    gen->add_option("--graph", gen_opts.graph, "Graph to place chargers on")->check(CLI::ExistingFile);
    gen->add_option("--output", gen_opts.output, "Write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*route) {
            return cmd_route(common, route_opts);
        }
        if (*pareto) {
            return cmd_pareto(common, p_source, p_target, p_capacity, p_guard);
        }
        if (*experiment) {
            return cmd_experiment(common, exp_opts);
        }
        return cmd_gen(gen_opts);
    } catch (const evroute::NoFeasibleRoute &e) {
        std::cerr << "no feasible route: " << e.what() << '\n';
        return kNoFeasibleRoute;
    } catch (const evroute::GuardExceeded &e) {
        std::cerr << "guard exceeded: " << e.what() << '\n';
        return kGuardExceeded;
    } catch (const evroute::ParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kInputError;
    } catch (const evroute::InvalidArgument &e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
}
