#ifndef EVROUTE_INGEST_HPP
#define EVROUTE_INGEST_HPP

#include "evroute/graph.hpp"
#include "evroute/utility_search.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace evroute {

enum class RoadClass : std::uint8_t { highway = 1, primary = 2, secondary = 3, local = 4 };

inline constexpr std::size_t kRoadClassCount = 4;
inline constexpr std::size_t kDrivingStyleCount = 3; // fast, moderate, slow

inline constexpr std::array<std::string_view, kRoadClassCount> kRoadClassNames{"highway", "primary",
                                                                               "secondary", "local"};
inline constexpr std::array<std::string_view, kDrivingStyleCount> kDrivingStyleNames{"fast", "moderate",
                                                                                     "slow"};

inline constexpr double kMetersPerSecondPerMph = 0.44704;
inline constexpr double kMetersPerMile = 1609.344;

struct StyleParams {
    int speed_mph = 0;
    int wh_per_mile = 0;
    friend bool operator==(const StyleParams &, const StyleParams &) = default;
};

/// Speed and consumption per (road class, driving style), flat ground.
struct DrivingParams {
    std::array<std::array<StyleParams, kDrivingStyleCount>, kRoadClassCount> table{{
        {{{70, 378}, {60, 329}, {50, 291}}}, // highway
        {{{70, 378}, {55, 308}, {40, 258}}}, // primary
        {{{60, 329}, {45, 275}, {35, 221}}}, // secondary
        {{{30, 202}, {25, 199}, {20, 197}}}, // local
    }};

    const StyleParams &at(RoadClass cls, StyleIndex style) const {
        return table[static_cast<std::size_t>(cls) - 1][style];
    }
    StyleParams &at(RoadClass cls, StyleIndex style) { return table[static_cast<std::size_t>(cls) - 1][style]; }

    void validate() const {
        for (std::size_t c = 0; c < kRoadClassCount; ++c) {
            for (std::size_t s = 0; s < kDrivingStyleCount; ++s) {
                if (table[c][s].speed_mph <= 0 || table[c][s].wh_per_mile < 0) {
                    throw InvalidArgument(std::string(kRoadClassNames[c]) + "." +
                                          std::string(kDrivingStyleNames[s]) +
                                          ": speed must be positive and consumption non-negative");
                }
            }
            if (table[c][0].speed_mph < table[c][1].speed_mph || table[c][1].speed_mph < table[c][2].speed_mph) {
                throw InvalidArgument(std::string(kRoadClassNames[c]) + ": speeds must satisfy fast >= moderate >= slow");
            }
        }
    }
};

struct NamedPreference {
    std::string name;
    PreferencePair pref;
};

/// Driving styles used by the two-phase search, in style-index order.
using StylePrefs = std::vector<NamedPreference>;

inline StylePrefs default_style_prefs() {
    return {{"fast", {0.8, 0.2}}, {"balanced", {0.5, 0.5}}, {"energy_saving", {0.2, 0.8}}};
}

inline std::vector<PreferencePair> pref_pairs(const StylePrefs &prefs) {
    std::vector<PreferencePair> out;
    for (const auto &p : prefs) {
        out.push_back(p.pref);
    }
    return out;
}

/// Everything a params file may override.
struct EngineParams {
    DrivingParams driving;
    StylePrefs prefs = default_style_prefs();
    std::optional<double> charge_rate_wh_per_s;
};

inline long long round_half_away_from_zero(double x) { return std::llround(x); }

/// Weight of traversing a segment of `length_m` meters in one style.
inline BiWeight segment_weight(std::int64_t length_m, RoadClass cls, StyleIndex style,
                               const DrivingParams &params) {
    const StyleParams &sp = params.at(cls, style);
    const double length = static_cast<double>(length_m);
    return {round_half_away_from_zero(length / (sp.speed_mph * kMetersPerSecondPerMph)),
            round_half_away_from_zero(length / kMetersPerMile * sp.wh_per_mile)};
}

struct Segment {
    VertexId u = 0;
    VertexId v = 0;
    std::int64_t length_m = 0;
    RoadClass cls = RoadClass::local;
    friend bool operator==(const Segment &, const Segment &) = default;
};

/// Contents of a graph file: undirected road segments (`p ev`) or explicit
/// bicriterion arcs (`p bi`). Vertex ids are 0-based in memory.
struct NetworkFile {
    enum class Kind { segments, bicriterion };
    Kind kind = Kind::segments;
    std::size_t vertex_count = 0;
    std::vector<Segment> segments;
    std::vector<StyledEdge> arcs;

    friend bool operator==(const NetworkFile &, const NetworkFile &) = default;
};

namespace detail {

template <typename T> std::optional<T> parse_number(std::string_view token) {
    T value{};
    const char *end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        return std::nullopt;
    }
    return value;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
            ++j;
        }
        if (j > i) {
            tokens.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return tokens;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

template <typename T> T require_number(std::string_view token, std::size_t line, const char *what) {
    auto v = parse_number<T>(token);
    if (!v) {
        throw ParseError(std::string("bad ") + what + " '" + std::string(token) + "'", line);
    }
    return *v;
}

inline std::ifstream open_input(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot open '" + path + "'");
    }
    return in;
}

} // namespace detail

/// Parses the text graph format:
///   c <comment>
///   p ev <n> <segments>     then   a <u> <v> <length_m> <class 1..4>
///   p bi <n> <arcs>         then   e <u> <v> <time_s> <energy_wh> <style>
/// Vertex ids in the file are 1-based.
inline NetworkFile read_network(std::istream &in) {
    NetworkFile net;
    bool have_header = false;
    std::size_t expected = 0;
    std::size_t line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tok = detail::split_ws(line);
        if (tok.empty() || tok[0] == "c") {
            continue;
        }
        if (tok[0] == "p") {
            if (have_header) {
                throw ParseError("duplicate problem line", line_no);
            }
            if (tok.size() != 4 || (tok[1] != "ev" && tok[1] != "bi")) {
                throw ParseError("expected 'p ev <n> <m>' or 'p bi <n> <m>'", line_no);
            }
            net.kind = tok[1] == "ev" ? NetworkFile::Kind::segments : NetworkFile::Kind::bicriterion;
            net.vertex_count = detail::require_number<std::size_t>(tok[2], line_no, "vertex count");
            expected = detail::require_number<std::size_t>(tok[3], line_no, "edge count");
            have_header = true;
            continue;
        }
        if (!have_header) {
            throw ParseError("data before problem line", line_no);
        }
        const auto vertex = [&](std::string_view t) {
            const auto id = detail::require_number<std::uint64_t>(t, line_no, "vertex id");
            if (id < 1 || id > net.vertex_count) {
                throw ParseError("vertex id " + std::string(t) + " outside [1, n]", line_no);
            }
            return static_cast<VertexId>(id - 1);
        };
        if (tok[0] == "a" && net.kind == NetworkFile::Kind::segments) {
            if (tok.size() != 5) {
                throw ParseError("expected 'a <u> <v> <length_m> <class>'", line_no);
            }
            Segment seg;
            seg.u = vertex(tok[1]);
            seg.v = vertex(tok[2]);
            seg.length_m = detail::require_number<std::int64_t>(tok[3], line_no, "length");
            if (seg.length_m <= 0) {
                throw NonPositiveLength("segment length must be positive", line_no);
            }
            const auto cls = detail::parse_number<int>(tok[4]);
            if (!cls || *cls < 1 || *cls > 4) {
                throw UnknownClass("unknown road class '" + std::string(tok[4]) + "'", line_no);
            }
            seg.cls = static_cast<RoadClass>(*cls);
            net.segments.push_back(seg);
        } else if (tok[0] == "e" && net.kind == NetworkFile::Kind::bicriterion) {
            if (tok.size() != 6) {
                throw ParseError("expected 'e <u> <v> <time> <energy> <style>'", line_no);
            }
            StyledEdge e;
            e.from = vertex(tok[1]);
            e.to = vertex(tok[2]);
            e.weight.time = detail::require_number<std::int64_t>(tok[3], line_no, "time");
            e.weight.energy = detail::require_number<std::int64_t>(tok[4], line_no, "energy");
            e.style = detail::require_number<StyleIndex>(tok[5], line_no, "style");
            e.is_charger_loop = e.from == e.to && e.weight.time > 0 && e.weight.energy < 0;
            net.arcs.push_back(e);
        } else {
            throw ParseError("unexpected line type '" + std::string(tok[0]) + "'", line_no);
        }
    }
    if (!have_header) {
        throw ParseError("missing problem line", line_no);
    }
    const std::size_t got = net.segments.size() + net.arcs.size();
    if (got != expected) {
        throw ParseError("header announces " + std::to_string(expected) + " edges, found " + std::to_string(got),
                         line_no);
    }
    return net;
}

inline void write_network(std::ostream &out, const NetworkFile &net) {
    if (net.kind == NetworkFile::Kind::segments) {
        out << "p ev " << net.vertex_count << ' ' << net.segments.size() << '\n';
        for (const Segment &s : net.segments) {
            out << "a " << s.u + 1 << ' ' << s.v + 1 << ' ' << s.length_m << ' '
                << static_cast<int>(s.cls) << '\n';
        }
    } else {
        out << "p bi " << net.vertex_count << ' ' << net.arcs.size() << '\n';
        for (const StyledEdge &e : net.arcs) {
            out << "e " << e.from + 1 << ' ' << e.to + 1 << ' ' << e.weight.time << ' ' << e.weight.energy << ' '
                << e.style << '\n';
        }
    }
}

/// Each segment becomes 2 directions x 3 styles: u->v fast, moderate, slow,
/// then v->u in the same style order.
inline RoadGraph build_graph(const NetworkFile &net, const DrivingParams &params = {},
                             std::vector<VertexId> chargers = {}) {
    if (net.kind == NetworkFile::Kind::bicriterion) {
        return RoadGraph(net.vertex_count, net.arcs, std::move(chargers));
    }
    params.validate();
    std::vector<StyledEdge> edges;
    edges.reserve(net.segments.size() * 2 * kDrivingStyleCount);
    for (const Segment &seg : net.segments) {
        for (const auto &[from, to] : {std::pair{seg.u, seg.v}, std::pair{seg.v, seg.u}}) {
            for (StyleIndex style = 0; style < kDrivingStyleCount; ++style) {
                edges.push_back({from, to, segment_weight(seg.length_m, seg.cls, style, params), style, false});
            }
        }
    }
    return RoadGraph(net.vertex_count, std::move(edges), std::move(chargers), kDrivingStyleCount);
}

inline RoadGraph load_graph(std::istream &in, const DrivingParams &params = {}) {
    return build_graph(read_network(in), params);
}

inline RoadGraph load_graph(const std::string &path, const DrivingParams &params = {}) {
    auto in = detail::open_input(path);
    return load_graph(in, params);
}

/// key=value overrides:
///   <class>.<style>.speed_mph=<int>, <class>.<style>.wh_per_mile=<int>,
///   pref.<name>=<alpha>,<beta>, charge.rate_wh_per_s=<real>.
/// Any pref.* line replaces the default style list; styles keep file order.
inline EngineParams read_params(std::istream &in) {
    EngineParams params;
    StylePrefs file_prefs;
    std::size_t line_no = 0;
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = detail::trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("expected key=value", line_no);
        }
        const std::string_view key = detail::trim(line.substr(0, eq));
        const std::string_view value = detail::trim(line.substr(eq + 1));
        if (key.starts_with("pref.")) {
            const auto comma = value.find(',');
            if (comma == std::string_view::npos || key.size() == 5) {
                throw ParseError("expected pref.<name>=<alpha>,<beta>", line_no);
            }
            PreferencePair p{detail::require_number<double>(detail::trim(value.substr(0, comma)), line_no, "alpha"),
                             detail::require_number<double>(detail::trim(value.substr(comma + 1)), line_no, "beta")};
            if (!p.valid()) {
                throw ParseError("invalid preference pair", line_no);
            }
            file_prefs.push_back({std::string(key.substr(5)), p});
            continue;
        }
        if (key == "charge.rate_wh_per_s") {
            const double rate = detail::require_number<double>(value, line_no, "charge rate");
            if (!(rate > 0.0)) {
                throw ParseError("charge rate must be positive", line_no);
            }
            params.charge_rate_wh_per_s = rate;
            continue;
        }
        const auto d1 = key.find('.');
        const auto d2 = d1 == std::string_view::npos ? d1 : key.find('.', d1 + 1);
        if (d2 == std::string_view::npos) {
            throw ParseError("unknown key '" + std::string(key) + "'", line_no);
        }
        const auto cls_it = std::find(kRoadClassNames.begin(), kRoadClassNames.end(), key.substr(0, d1));
        const auto style_it =
            std::find(kDrivingStyleNames.begin(), kDrivingStyleNames.end(), key.substr(d1 + 1, d2 - d1 - 1));
        const std::string_view field = key.substr(d2 + 1);
        if (cls_it == kRoadClassNames.end()) {
            throw UnknownClass("unknown road class in '" + std::string(key) + "'", line_no);
        }
        if (style_it == kDrivingStyleNames.end() || (field != "speed_mph" && field != "wh_per_mile")) {
            throw ParseError("unknown key '" + std::string(key) + "'", line_no);
        }
        StyleParams &sp = params.driving.table[cls_it - kRoadClassNames.begin()][style_it - kDrivingStyleNames.begin()];
        (field == "speed_mph" ? sp.speed_mph : sp.wh_per_mile) = detail::require_number<int>(value, line_no, "integer");
    }
    if (!file_prefs.empty()) {
        params.prefs = std::move(file_prefs);
    }
    params.driving.validate();
    return params;
}

inline EngineParams load_params(const std::string &path) {
    auto in = detail::open_input(path);
    return read_params(in);
}

/// One 1-based vertex id per line; '#' starts a comment.
inline std::vector<VertexId> read_chargers(std::istream &in, std::size_t vertex_count) {
    std::vector<VertexId> out;
    std::size_t line_no = 0;
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = detail::trim(line);
        if (line.empty()) {
            continue;
        }
        const auto id = detail::require_number<std::uint64_t>(line, line_no, "vertex id");
        if (id < 1 || id > vertex_count) {
            throw ParseError("charger id outside [1, n]", line_no);
        }
        out.push_back(static_cast<VertexId>(id - 1));
    }
    return out;
}

inline std::vector<VertexId> load_chargers(const std::string &path, std::size_t vertex_count) {
    auto in = detail::open_input(path);
    return read_chargers(in, vertex_count);
}

inline void write_chargers(std::ostream &out, std::span<const VertexId> chargers) {
    for (VertexId v : chargers) {
        out << v + 1 << '\n';
    }
}

// ---------------------------------------------------------------------------
// Synthetic instances

/// mt19937_64 is fully specified by the standard; the bounded draws below are
/// implemented here so sequences do not depend on the library's distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_{seed} {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) {
            return static_cast<std::int64_t>(next());
        }
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    /// Uniform real in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <typename T> void shuffle(std::vector<T> &items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1))]);
        }
    }

  private:
    std::mt19937_64 engine_;
};

/// Relative weights of highway, primary, secondary, local segments.
struct ClassMix {
    std::array<double, kRoadClassCount> weights{0.1, 0.2, 0.3, 0.4};

    RoadClass draw(Rng &rng) const {
        const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
        double x = rng.unit() * total;
        for (std::size_t c = 0; c < kRoadClassCount; ++c) {
            if (x < weights[c]) {
                return static_cast<RoadClass>(c + 1);
            }
            x -= weights[c];
        }
        return RoadClass::local;
    }
};

namespace detail {
inline Segment random_segment(VertexId u, VertexId v, const ClassMix &mix, Rng &rng) {
    const RoadClass cls = mix.draw(rng);
    const std::int64_t length = cls == RoadClass::local ? rng.uniform(100, 500) : rng.uniform(500, 5000);
    return {u, v, length, cls};
}

// Grid segments in row-major order: right neighbour, then down neighbour.
inline std::vector<std::pair<VertexId, VertexId>> grid_pairs(std::size_t rows, std::size_t cols) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const auto id = static_cast<VertexId>(r * cols + c);
            if (c + 1 < cols) {
                pairs.emplace_back(id, id + 1);
            }
            if (r + 1 < rows) {
                pairs.emplace_back(id, static_cast<VertexId>(id + cols));
            }
        }
    }
    return pairs;
}
} // namespace detail

/// 4-neighbour grid of road segments; deterministic per seed.
inline NetworkFile gen_grid_network(std::size_t rows, std::size_t cols, const ClassMix &mix, std::uint64_t seed) {
    if (rows < 1 || cols < 1) {
        throw InvalidArgument("grid needs rows, cols >= 1");
    }
    Rng rng(seed);
    NetworkFile net;
    net.vertex_count = rows * cols;
    for (const auto &[u, v] : detail::grid_pairs(rows, cols)) {
        net.segments.push_back(detail::random_segment(u, v, mix, rng));
    }
    return net;
}

inline RoadGraph gen_grid(std::size_t rows, std::size_t cols, const ClassMix &mix, std::uint64_t seed,
                          const DrivingParams &params = {}) {
    return build_graph(gen_grid_network(rows, cols, mix, seed), params);
}

/// Connected road-like network: a random spanning tree of the grid plus
/// random extra grid segments up to `segment_count`.
inline NetworkFile gen_sparse_grid_network(std::size_t rows, std::size_t cols, std::size_t segment_count,
                                           const ClassMix &mix, std::uint64_t seed) {
    const std::size_t n = rows * cols;
    auto pairs = detail::grid_pairs(rows, cols);
    if (n == 0 || segment_count + 1 < n || segment_count > pairs.size()) {
        throw InvalidArgument("segment count must lie in [n-1, grid segments]");
    }
    Rng rng(seed);
    rng.shuffle(pairs);
    std::vector<VertexId> parent(n);
    std::iota(parent.begin(), parent.end(), VertexId{0});
    const auto find = [&](VertexId x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    std::vector<std::uint8_t> used(pairs.size(), 0);
    std::vector<std::pair<VertexId, VertexId>> chosen;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const VertexId a = find(pairs[k].first);
        const VertexId b = find(pairs[k].second);
        if (a != b) {
            parent[a] = b;
            used[k] = 1;
            chosen.push_back(pairs[k]);
        }
    }
    for (std::size_t k = 0; k < pairs.size() && chosen.size() < segment_count; ++k) {
        if (!used[k]) {
            chosen.push_back(pairs[k]);
        }
    }
    std::sort(chosen.begin(), chosen.end());
    NetworkFile net;
    net.vertex_count = n;
    for (const auto &[u, v] : chosen) {
        net.segments.push_back(detail::random_segment(u, v, mix, rng));
    }
    return net;
}

/// Random bicriterion multigraph with weights in [min_weight, max_weight].
/// With `acyclic`, every arc goes from a lower to a higher vertex id.
inline RoadGraph gen_random_bigraph(std::size_t n, std::size_t m, std::int64_t min_weight, std::int64_t max_weight,
                                    std::uint64_t seed, bool acyclic = false, std::uint32_t styles = 2) {
    if (n == 0 || (acyclic && n < 2 && m > 0)) {
        throw InvalidArgument("graph too small for the requested arcs");
    }
    Rng rng(seed);
    std::vector<StyledEdge> edges;
    for (std::size_t k = 0; k < m; ++k) {
        auto u = static_cast<VertexId>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
        auto v = static_cast<VertexId>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
        if (acyclic) {
            while (u == v) {
                v = static_cast<VertexId>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
            }
            if (u > v) {
                std::swap(u, v);
            }
        }
        edges.push_back({u, v, {rng.uniform(min_weight, max_weight), rng.uniform(min_weight, max_weight)},
                         static_cast<StyleIndex>(rng.uniform(0, styles - 1)), false});
    }
    return RoadGraph(n, std::move(edges), {}, styles);
}

/// k distinct vertices drawn uniformly, returned in draw order.
inline std::vector<VertexId> sample_distinct_vertices(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k > n) {
        throw InvalidArgument("cannot sample more distinct vertices than exist");
    }
    Rng rng(seed);
    std::vector<VertexId> all(n);
    std::iota(all.begin(), all.end(), VertexId{0});
    // Partial Fisher-Yates.
    for (std::size_t i = 0; i < k; ++i) {
        std::swap(all[i], all[static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(i),
                                                                    static_cast<std::int64_t>(n) - 1))]);
    }
    all.resize(k);
    return all;
}

/// Chain v_1..v_{n+1} with arcs (1+a_i, 1) and (1, 1+a_i) per value. A path
/// meets the goal iff the values split into two equal-sum halves.
struct PartitionInstance {
    std::vector<std::int64_t> values;
    std::int64_t half_sum = 0; // floor of total / 2
    bool odd_total = false;
    RoadGraph graph;
    QueryGoal goal;
    VertexId source = 0;
    VertexId target = 0;
};

inline PartitionInstance gen_partition_instance(std::span<const std::int64_t> values) {
    if (values.empty()) {
        throw InvalidArgument("partition instance needs at least one value");
    }
    PartitionInstance inst;
    inst.values.assign(values.begin(), values.end());
    std::int64_t total = 0;
    std::vector<StyledEdge> edges;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] <= 0) {
            throw InvalidArgument("partition values must be positive");
        }
        total = detail::checked_add(total, values[i]);
        const auto from = static_cast<VertexId>(i);
        edges.push_back({from, from + 1, {1 + values[i], 1}, 0, false});
        edges.push_back({from, from + 1, {1, 1 + values[i]}, 1, false});
    }
    const auto n = static_cast<std::int64_t>(values.size());
    inst.half_sum = total / 2;
    inst.odd_total = total % 2 != 0;
    // With an odd total the floor makes the goal unattainable, as it must be.
    inst.goal = {n + inst.half_sum, n + inst.half_sum};
    inst.graph = RoadGraph(values.size() + 1, std::move(edges), {}, 2);
    inst.target = static_cast<VertexId>(values.size());
    return inst;
}

} // namespace evroute

#endif
