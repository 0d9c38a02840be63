#ifndef EVROUTE_TESTS_FIXTURES_HPP
#define EVROUTE_TESTS_FIXTURES_HPP

#include "evroute/evroute.hpp"

#include <algorithm>
#include <vector>

namespace evroute::testing {

// D1: s=0, a=1, t=2; two parallel styles on each hop.
inline RoadGraph fixture_d1() {
    return RoadGraph(3,
                     {{0, 1, {10, 5}, 0, false},
                      {0, 1, {4, 20}, 1, false},
                      {1, 2, {10, 5}, 0, false},
                      {1, 2, {4, 20}, 1, false}},
                     {}, 2);
}

// G2: s=0, v=1, t=2; edges A=(1,10), B=(8,2) on s->v and C=(2,9), D=(7,4) on v->t.
inline constexpr EdgeId kA = 0, kB = 1, kC = 2, kD = 3;
inline RoadGraph fixture_g2() {
    return RoadGraph(3,
                     {{0, 1, {1, 10}, 0, false},
                      {0, 1, {8, 2}, 1, false},
                      {1, 2, {2, 9}, 0, false},
                      {1, 2, {7, 4}, 1, false}},
                     {}, 2);
}

// s=0 -(100,8)-> v=1 -(100,8)-> t=2, charger self-loop (60,-10) at v.
inline RoadGraph fixture_charger_loop_chain() {
    return RoadGraph(3,
                     {{0, 1, {100, 8}, 0, false}, {1, 1, {60, -10}, 0, true}, {1, 2, {100, 8}, 0, false}},
                     {1}, 1);
}

// Same chain without the loop; the station is handled by the charging module.
inline RoadGraph fixture_station_chain() {
    return RoadGraph(3, {{0, 1, {100, 8}, 0, false}, {1, 2, {100, 8}, 0, false}}, {1}, 1);
}

inline const std::vector<PreferencePair> &fast_eco() {
    static const std::vector<PreferencePair> prefs{{1.0, 0.0}, {0.0, 1.0}};
    return prefs;
}

// Quadratic dominance filter, independent of ParetoSet.
inline std::vector<BiWeight> brute_force_frontier(const std::vector<BiWeight> &points) {
    std::vector<BiWeight> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < points.size() && keep; ++j) {
            const BiWeight &a = points[j];
            const BiWeight &b = points[i];
            if (a.time <= b.time && a.energy <= b.energy && (a.time < b.time || a.energy < b.energy)) {
                keep = false;
            }
        }
        if (keep) {
            out.push_back(points[i]);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Strict vertices of the lower-left convex hull of a point set, by integer
// cross products on the Pareto frontier (collinear middle points excluded).
inline std::vector<BiWeight> lower_left_hull_vertices(const std::vector<BiWeight> &points) {
    const auto front = brute_force_frontier(points); // time ascending, energy descending
    std::vector<BiWeight> hull;
    for (const BiWeight &p : front) {
        while (hull.size() >= 2) {
            const BiWeight &a = hull[hull.size() - 2];
            const BiWeight &b = hull.back();
            const __int128 cross = static_cast<__int128>(b.time - a.time) * (p.energy - a.energy) -
                                   static_cast<__int128>(b.energy - a.energy) * (p.time - a.time);
            if (cross <= 0) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(p);
    }
    return hull;
}

} // namespace evroute::testing

#endif
