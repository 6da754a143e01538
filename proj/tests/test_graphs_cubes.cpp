#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include "medgeo/corpus.hpp"
#include "medgeo/errors.hpp"
#include "medgeo/median_graph.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace medgeo;
using fixture::set_of;

namespace {

std::set<std::vector<int>> as_set(const std::vector<std::vector<int>>& cubes) {
  return {cubes.begin(), cubes.end()};
}

}  // namespace

TEST(SimpleGraph, RejectsMalformed) {
  EXPECT_THROW(SimpleGraph({"a", "b"}, {{0, 0}}), InputError);
  EXPECT_THROW(SimpleGraph({"a", "b"}, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(SimpleGraph({"a", "b"}, {{0, 2}}), InputError);
  SimpleGraph split({"a", "b", "c"}, {{0, 1}});
  EXPECT_FALSE(split.connected());
  EXPECT_THROW(certify_median_graph(split), InputError);
}

TEST(SimpleGraph, DistancesMatchBfsOracle) {
  gen::for_seeds(800, 10, [](std::uint64_t, gen::Rng& rng) {
    auto g = gen::random_connected_graph(12, 6, rng);
    auto d = g.distances();
    auto expected = oracle::bfs_distances(12, g.edges());
    for (int x = 0; x < 12; ++x)
      for (int y = 0; y < 12; ++y) EXPECT_EQ(d(x, y), expected[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
  });
}

TEST(Certify, TreesAndCube) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    EXPECT_TRUE(std::holds_alternative<MedianGraphCert>(certify_median_graph(random_tree(20, seed))));
  auto q3 = require_median_graph(hypercube_graph(3));
  EXPECT_EQ(q3.walls().size(), 3u);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) EXPECT_EQ(q3.dist(x, y), __builtin_popcount(static_cast<unsigned>(x ^ y)));
}

TEST(Certify, RejectsK23WithWitness) {
  auto g = complete_bipartite(2, 3);
  auto r = certify_median_graph(g);
  ASSERT_TRUE(std::holds_alternative<NotMedianGraph>(r));
  const auto& bad = std::get<NotMedianGraph>(r);
  auto common = oracle::medians(g.path_metric().distances(), bad.witness[0], bad.witness[1], bad.witness[2]);
  EXPECT_NE(common.size(), 1u);
  EXPECT_EQ(bad.kind, MetricClass::ModularNotMedian);
  EXPECT_THROW(require_median_graph(g), InputError);
}

TEST(Certify, AgreesWithOracleOnRandomGraphs) {
  gen::for_seeds(900, 60, [](std::uint64_t seed, gen::Rng& rng) {
    int n = std::uniform_int_distribution<int>(2, 9)(rng);
    auto g = gen::random_connected_graph(n, static_cast<int>(seed % 4), rng);
    bool median = std::holds_alternative<MedianGraphCert>(certify_median_graph(g));
    EXPECT_EQ(median, oracle::is_median_graph(n, g.edges())) << "seed " << seed;
  });
  for (int n = 3; n <= 8; ++n)
    EXPECT_EQ(std::holds_alternative<MedianGraphCert>(certify_median_graph(cycle_graph(n))), n == 4);
}

TEST(Walls, SmallExamples) {
  EXPECT_EQ(require_median_graph(path_graph(2)).walls().size(), 1u);
  EXPECT_EQ(require_median_graph(cycle_graph(4)).walls().size(), 2u);
  auto p4 = require_median_graph(path_graph(4));
  EXPECT_EQ(p4.walls().size(), 3u);
  EXPECT_EQ(p4.dist(0, 3), 3);
  EXPECT_EQ(separating_walls(p4, 0, 3), 3);
  EXPECT_EQ(edge_halfspace(p4, 1, 2), set_of(4, {0, 1}));
  EXPECT_THROW(edge_halfspace(p4, 0, 2), InputError);
}

TEST(Walls, SeparatingCountIsPathDistance) {
  std::vector<SimpleGraph> graphs{grid_graph(3, 4), hypercube_graph(4), random_tree(30, 5)};
  for (const auto& g : graphs) {
    auto cert = require_median_graph(g);
    auto expected = oracle::bfs_distances(static_cast<int>(g.size()), g.edges());
    for (int x = 0; x < static_cast<int>(g.size()); ++x)
      for (int y = 0; y < static_cast<int>(g.size()); ++y)
        EXPECT_EQ(separating_walls(cert, x, y), expected[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
  }
}

TEST(Walls, MediansMatchOracle) {
  auto g = grid_graph(3, 3);
  auto cert = require_median_graph(g);
  auto d = g.path_metric().distances();
  for (int x = 0; x < 9; ++x)
    for (int y = 0; y < 9; ++y)
      for (int z = 0; z < 9; ++z) EXPECT_EQ(cert.median(x, y, z), oracle::medians(d, x, y, z).at(0));
  for (int x = 0; x < 9; ++x)
    for (int y = 0; y < 9; ++y) EXPECT_EQ(members(cert.interval(x, y)), oracle::interval(d, x, y));
}

TEST(Coordinates, BaseAtOriginAndCubeLabels) {
  auto q3 = require_median_graph(hypercube_graph(3));
  auto c = wall_coordinates(q3, 0);
  EXPECT_TRUE(c[0].none());
  std::set<PointSet> distinct(c.begin(), c.end());
  EXPECT_EQ(distinct.size(), 8u);
  for (int v = 0; v < 8; ++v) EXPECT_EQ(static_cast<int>(c[static_cast<std::size_t>(v)].count()), __builtin_popcount(static_cast<unsigned>(v)));

  auto p4 = require_median_graph(path_graph(4));
  auto cp = wall_coordinates(p4, 0);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(static_cast<int>(cp[static_cast<std::size_t>(v)].count()), v);
  for (int v = 1; v < 4; ++v) EXPECT_TRUE(cp[static_cast<std::size_t>(v - 1)].is_subset_of(cp[static_cast<std::size_t>(v)]));
}

TEST(Crossing, FamilySizes) {
  EXPECT_EQ(max_crossing_family(require_median_graph(random_tree(12, 1))), 1);
  EXPECT_EQ(max_crossing_family(require_median_graph(cycle_graph(4))), 2);
  EXPECT_EQ(max_crossing_family(require_median_graph(hypercube_graph(4))), 4);
  EXPECT_EQ(max_crossing_family(require_median_graph(grid_graph(3, 4))), 2);
}

TEST(FillCubes, Examples) {
  auto q3 = fill_cubes(require_median_graph(hypercube_graph(3)));
  EXPECT_EQ(q3.max_dim, 3);
  EXPECT_EQ(q3.count(1), 12u);
  EXPECT_EQ(q3.count(2), 6u);
  EXPECT_EQ(q3.count(3), 1u);
  auto c4 = fill_cubes(require_median_graph(cycle_graph(4)));
  EXPECT_EQ(c4.count(2), 1u);
  auto tree = fill_cubes(require_median_graph(random_tree(25, 8)));
  EXPECT_EQ(tree.max_dim, 1);
  EXPECT_EQ(tree.count(2), 0u);
  auto capped = fill_cubes(require_median_graph(hypercube_graph(3)), 2);
  EXPECT_EQ(capped.count(3), 0u);
  EXPECT_THROW(fill_cubes(require_median_graph(cycle_graph(4)), 0), InputError);
}

TEST(FillCubes, MatchesSubgraphOracle) {
  std::vector<SimpleGraph> graphs{hypercube_graph(4), grid_graph(3, 3), random_tree(15, 2), star_graph(4),
                                  path_graph(5)};
  for (const auto& g : graphs) {
    auto cert = require_median_graph(g);
    auto cubes = fill_cubes(cert, 5);
    for (int k = 1; k <= 5; ++k)
      EXPECT_EQ(as_set(cubes.count(k) ? cubes.cubes.at(k) : std::vector<std::vector<int>>{}),
                oracle::cube_subgraphs(static_cast<int>(g.size()), g.edges(), k))
          << "dimension " << k;
  }
}

TEST(FillCubes, CubulatedWallSpacesMatchOracle) {
  gen::for_seeds(1000, 8, [](std::uint64_t seed, gen::Rng&) {
    auto r = cubulate(random_wall_space(6, 7, seed));
    auto cubes = fill_cubes(r.cert);
    const auto& g = r.cert.graph();
    for (int k = 1; k <= cubes.max_dim + 1; ++k)
      EXPECT_EQ(as_set(cubes.count(k) ? cubes.cubes.at(k) : std::vector<std::vector<int>>{}),
                oracle::cube_subgraphs(static_cast<int>(g.size()), g.edges(), k));
  });
}
