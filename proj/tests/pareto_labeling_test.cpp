#include "fixtures.hpp"

#include <gtest/gtest.h>


namespace evroute {
namespace {

using testing::brute_force_frontier;

TEST(ParetoFrontier, D1KeepsThreeCollinearPoints) {
    const RoadGraph g = testing::fixture_d1();
    const LabelTable table = pareto_frontier(g, 0, {});
    EXPECT_EQ(table.frontier(2), (std::vector<BiWeight>{{8, 40}, {14, 25}, {20, 10}}));
    EXPECT_EQ(table.frontier(0), (std::vector<BiWeight>{{0, 0}}));
}

TEST(ParetoFrontier, G2KeepsAllFourRoutes) {
    const RoadGraph g = testing::fixture_g2();
    const LabelTable table = pareto_frontier(g, 0, {});
    EXPECT_EQ(table.frontier(2), (std::vector<BiWeight>{{3, 19}, {8, 14}, {10, 11}, {15, 6}}));
}

TEST(ParetoFrontier, PathsReproduceLabelWeights) {
    const RoadGraph g = testing::fixture_g2();
    const LabelTable table = pareto_frontier(g, 0, {});
    for (LabelId id : table.labels_at(2)) {
        const auto path = table.path_edges(id);
        ASSERT_EQ(path.size(), 2u);
        EXPECT_EQ(g.edge(path[0]).from, 0u);
        EXPECT_EQ(g.edge(path[1]).to, 2u);
        EXPECT_EQ(path_weight(g, path), table.label(id).weight);
    }
}

TEST(ParetoFrontier, UnreachableVertexHasEmptyFrontier) {
    const RoadGraph g(3, {{0, 1, {1, 1}, 0, false}});
    const LabelTable table = pareto_frontier(g, 0, {});
    EXPECT_TRUE(table.reachable(1));
    EXPECT_FALSE(table.reachable(2));
    EXPECT_TRUE(table.frontier(2).empty());
    EXPECT_FALSE(feasible(table, 2, {}));
}

TEST(ParetoFrontier, InvalidInputs) {
    const RoadGraph g = testing::fixture_d1();
    EXPECT_THROW(pareto_frontier(g, 3, {}), InvalidArgument);
    EXPECT_THROW(ev_pareto_frontier(g, 0, 0), InvalidArgument);
}

TEST(ParetoFrontier, NegativeCycleTripsRoundGuard) {
    // Without a capacity, a cycle that lowers energy produces new Pareto labels forever.
    const RoadGraph g(2, {{0, 1, {1, 0}, 0, false}, {1, 0, {1, -5}, 0, false}});
    EXPECT_THROW(pareto_frontier(g, 0, {}), RoundGuardExceeded);
}

TEST(ParetoFrontier, EvCapacityBoundaryIsInclusive) {
    const RoadGraph g(2, {{0, 1, {5, 10}, 0, false}});
    EXPECT_TRUE(ev_pareto_frontier(g, 0, 10).reachable(1));
    EXPECT_FALSE(ev_pareto_frontier(g, 0, 9).reachable(1));
}

TEST(ParetoFrontier, EvChargerLoopChain) {
    const RoadGraph g = testing::fixture_charger_loop_chain();
    EXPECT_EQ(ev_pareto_frontier(g, 0, 10).frontier(2), (std::vector<BiWeight>{{260, 8}}));
    EXPECT_EQ(ev_pareto_frontier(g, 0, 20).frontier(2), (std::vector<BiWeight>{{200, 16}, {260, 8}}));
    EXPECT_FALSE(ev_pareto_frontier(g, 0, 7).reachable(2));
}

TEST(ParetoFrontier, ClampingNeverHelpsBeyondFullBattery) {
    // Regenerating downhill with a full battery gains nothing.
    const RoadGraph g(3, {{0, 1, {10, -30}, 0, false}, {1, 2, {10, 25}, 0, false}});
    EXPECT_EQ(ev_pareto_frontier(g, 0, 30).frontier(2), (std::vector<BiWeight>{{20, 25}}));
    EXPECT_EQ(pareto_frontier(g, 0, {}).frontier(2), (std::vector<BiWeight>{{20, -5}}));
}

TEST(Feasible, PicksFastestAdmittedPoint) {
    const LabelTable table = pareto_frontier(testing::fixture_g2(), 0, {});
    EXPECT_EQ(feasible(table, 2, QueryGoal::energy_at_most(14)), (BiWeight{8, 14}));
    EXPECT_EQ(feasible(table, 2, QueryGoal::energy_at_most(13)), (BiWeight{10, 11}));
    EXPECT_EQ(feasible(table, 2, QueryGoal{9, 14}), (BiWeight{8, 14}));
    EXPECT_FALSE(feasible(table, 2, QueryGoal{7, 14}));
    EXPECT_FALSE(feasible(table, 2, QueryGoal::energy_at_most(5)));
    const auto id = feasible_label(table, 2, QueryGoal::energy_at_most(14));
    ASSERT_TRUE(id);
    EXPECT_EQ(table.path_edges(*id), (std::vector<EdgeId>{testing::kA, testing::kD}));
}

TEST(ReplayPath, AppliesBatterySemantics) {
    const RoadGraph g = testing::fixture_charger_loop_chain();
    const std::vector<EdgeId> with_loop{0, 1, 2};
    EXPECT_EQ(replay_path(g, with_loop, ParetoConfig::ev(10)), (BiWeight{260, 8}));
    const std::vector<EdgeId> direct{0, 2};
    EXPECT_FALSE(replay_path(g, direct, ParetoConfig::ev(10)));
    EXPECT_EQ(replay_path(g, direct, {}), (BiWeight{200, 16}));
}

// Exact agreement with exhaustive enumeration on non-negative random graphs;
// walks of up to n-1 edges cover every simple path.
TEST(ParetoFrontier, MatchesEnumerationOnRandomGraphs) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const std::size_t n = 2 + seed % 7;
        const std::size_t m = 3 + seed % 14;
        const RoadGraph g = gen_random_bigraph(n, m, 0, 20, seed);
        const LabelTable table = pareto_frontier(g, 0, {});
        const auto walks = enumerate_walks_all_targets(g, 0, n - 1);
        for (VertexId v = 0; v < n; ++v) {
            ASSERT_EQ(table.frontier(v), brute_force_frontier(walks[v])) << "seed " << seed << " vertex " << v;
        }
    }
}

// With charger loops and clamping, long walks matter; compare against deep
// enumeration once it has stopped changing.
TEST(ParetoFrontier, EvMatchesDeepEnumeration) {
    std::size_t compared = 0;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Rng rng(seed);
        const std::size_t n = 3 + seed % 3;
        std::vector<StyledEdge> edges;
        for (std::size_t k = 0; k < n + 2; ++k) {
            const auto u = static_cast<VertexId>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
            const auto v = static_cast<VertexId>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
            if (u != v) {
                edges.push_back({u, v, {rng.uniform(1, 9), rng.uniform(-4, 9)}, 0, false});
            }
        }
        const auto station = static_cast<VertexId>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
        edges.push_back({station, station, {rng.uniform(1, 5), -rng.uniform(1, 6)}, 0, true});
        const RoadGraph g(n, edges, {station});
        const WattHours capacity = rng.uniform(5, 12);
        const auto cfg = ParetoConfig::ev(capacity);

        const LabelTable table = pareto_frontier(g, 0, cfg);
        const auto shallow = enumerate_walks_all_targets(g, 0, 3 * n + 4, cfg);
        const auto deep = enumerate_walks_all_targets(g, 0, 3 * n + 8, cfg);
        for (VertexId v = 0; v < n; ++v) {
            const auto expected = brute_force_frontier(deep[v]);
            if (expected != brute_force_frontier(shallow[v])) {
                continue; // enumeration depth not yet converged for this vertex
            }
            ASSERT_EQ(table.frontier(v), expected) << "seed " << seed << " vertex " << v;
            ++compared;
        }
    }
    EXPECT_GT(compared, 100u);
}

TEST(ParetoFrontier, LargerCapacityNeverShrinksReach) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const RoadGraph g = gen_grid(4, 4, {}, seed);
        for (WattHours c : {300, 600, 1200, 2400}) {
            const LabelTable small = ev_pareto_frontier(g, 0, c);
            const LabelTable big = ev_pareto_frontier(g, 0, 2 * c);
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (small.reachable(v)) {
                    ASSERT_TRUE(big.reachable(v));
                    // Every small-capacity point is weakly dominated by a big-capacity one.
                    const auto bf = big.frontier(v);
                    for (const BiWeight &p : small.frontier(v)) {
                        ASSERT_TRUE(std::any_of(bf.begin(), bf.end(),
                                                [&](const BiWeight &q) { return dominates_or_equal(q, p); }));
                    }
                }
            }
        }
    }
}

TEST(ParetoFrontier, StoredPathsAreFeasibleAndMatchWeights) {
    const RoadGraph g = gen_grid(5, 5, {}, 9);
    const auto cfg = ParetoConfig::ev(1500);
    const LabelTable table = pareto_frontier(g, 0, cfg);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (LabelId id : table.labels_at(v)) {
            const auto path = table.path_edges(id);
            ASSERT_EQ(replay_path(g, path, cfg), table.label(id).weight);
        }
    }
}

TEST(PathOracle, BudgetGuard) {
    const RoadGraph g(1, {{0, 0, {1, 1}, 0, false}, {0, 0, {2, 2}, 0, false}});
    EXPECT_THROW(enumerate_paths_oracle(g, 0, 0, 40, {}, 1000), ExplosionGuard);
}

} // namespace
} // namespace evroute
