#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include "medgeo/corpus.hpp"
#include "medgeo/errors.hpp"
#include "medgeo/median_algebra.hpp"

#include <gtest/gtest.h>

using namespace medgeo;
using fixture::set_of;

TEST(Axioms, AsymmetricFixtureFailsOnlySymmetry) {
  auto report = validate_axioms(asymmetric_interval_fixture());
  EXPECT_TRUE(report[Axiom::MA1].pass);
  EXPECT_FALSE(report[Axiom::MA2].pass);
  EXPECT_EQ(report[Axiom::MA2].witness, (std::vector<int>{0, 1}));
  EXPECT_TRUE(report[Axiom::MA3].pass);
  EXPECT_TRUE(report[Axiom::MA4].pass);
  EXPECT_FALSE(report.all_pass());
  EXPECT_THROW(FiniteMedianAlgebra::from(asymmetric_interval_fixture()), InputError);
}

TEST(Axioms, SinglePointPasses) {
  IntervalStructure s{{"x"}, {set_of(1, {0})}};
  EXPECT_TRUE(validate_axioms(s).all_pass());
}

TEST(Axioms, BooleanAlgebraPasses) {
  EXPECT_TRUE(validate_axioms(fixture::boolean_structure(2)).all_pass());
  EXPECT_TRUE(validate_axioms(fixture::boolean_structure(3)).all_pass());
}

TEST(Axioms, MalformedStructureRejected) {
  IntervalStructure s{{"x", "y"}, {set_of(2, {0})}};
  EXPECT_THROW(s.check_wellformed(), InputError);
}

TEST(Axioms, BrokenIdempotenceReported) {
  IntervalStructure s{{"x", "y"}, {set_of(2, {0, 1}), set_of(2, {0, 1}), set_of(2, {0, 1}), set_of(2, {1})}};
  auto report = validate_axioms(s);
  EXPECT_FALSE(report[Axiom::MA1].pass);
  EXPECT_EQ(report[Axiom::MA1].witness, (std::vector<int>{0}));
}

TEST(Axioms, GraphMetricsAgreeWithMedianOracle) {
  gen::for_seeds(100, 25, [](std::uint64_t, gen::Rng& rng) {
    auto g = gen::random_connected_graph(7, 3, rng);
    auto m = g.path_metric();
    bool median = oracle::classify(m.distances()) == oracle::Kind::Median;
    EXPECT_EQ(validate_axioms(m.interval_structure()).all_pass(), median);
  });
}

TEST(Median, IdempotentAndPathMiddle) {
  auto a = fixture::graph_algebra(path_graph(3));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) EXPECT_EQ(a.median(x, x, y), x);
  EXPECT_EQ(a.median(0, 1, 2), 1);
  EXPECT_EQ(a.median(2, 0, 1), 1);
}

TEST(Median, BooleanMedianIsMajority) {
  auto a = FiniteMedianAlgebra::from(fixture::boolean_structure(3));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      for (int z = 0; z < 8; ++z) EXPECT_EQ(a.median(x, y, z), (x & y) | (y & z) | (z & x));
}

TEST(Median, CommonPointCodes) {
  EXPECT_EQ(common_point(set_of(3, {0, 1}), set_of(3, {1, 2}), set_of(3, {1})), 1);
  EXPECT_EQ(common_point(set_of(3, {0}), set_of(3, {1}), set_of(3, {2})), -1);
  EXPECT_EQ(common_point(set_of(3, {0, 1}), set_of(3, {0, 1}), set_of(3, {0, 1, 2})), -2);
}

TEST(Convexity, PathExamples) {
  auto a = fixture::graph_algebra(path_graph(3));
  EXPECT_TRUE(is_convex(a, PointSet(3)));
  EXPECT_TRUE(is_convex(a, full_set(3)));
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(is_convex(a, singleton(3, i)));
  EXPECT_FALSE(is_convex(a, set_of(3, {0, 2})));
  EXPECT_EQ(convex_hull(a, set_of(3, {0, 2})), full_set(3));
}

TEST(Halfspaces, PathAndSmallExamples) {
  auto one = FiniteMedianAlgebra::from(IntervalStructure{{"x"}, {set_of(1, {0})}});
  auto w1 = enumerate_halfspaces(one);
  ASSERT_EQ(w1.size(), 1u);
  EXPECT_EQ(w1[0].side, full_set(1));

  auto p3 = enumerate_halfspaces(fixture::graph_algebra(path_graph(3)));
  ASSERT_EQ(p3.size(), 3u);
  EXPECT_EQ(p3[0].side, set_of(3, {0}));
  EXPECT_EQ(p3[1].side, set_of(3, {0, 1}));
  EXPECT_EQ(p3[2].side, full_set(3));

  auto c4 = enumerate_halfspaces(fixture::graph_algebra(cycle_graph(4)));
  EXPECT_EQ(c4.size(), 3u);
}

TEST(Halfspaces, MatchBruteForceOnRandomMedianGraphs) {
  gen::for_seeds(200, 20, [](std::uint64_t seed, gen::Rng& rng) {
    auto tree = random_tree(3 + static_cast<int>(seed % 8), seed);
    std::vector<SimpleGraph> graphs{tree, grid_graph(2, 3), hypercube_graph(3)};
    (void)rng;
    for (const auto& g : graphs) {
      auto a = fixture::graph_algebra(g);
      auto walls = enumerate_halfspaces(a);
      auto expected = oracle::halfspaces(a.structure());
      ASSERT_EQ(walls.size(), expected.size());
      for (std::size_t i = 0; i < walls.size(); ++i) EXPECT_EQ(members(walls[i].side), expected[i]);
    }
  });
}

TEST(Halfspaces, CapEnforced) {
  auto a = fixture::graph_algebra(path_graph(20));
  EXPECT_THROW(enumerate_halfspaces(a, 16), ResourceError);
  EXPECT_NO_THROW(enumerate_halfspaces(a, 20));
}

TEST(Separate, PathAndBoolean) {
  auto a = fixture::graph_algebra(path_graph(3));
  auto h = separate(a, set_of(3, {0}), set_of(3, {2}));
  EXPECT_EQ(h, set_of(3, {0}));

  auto b = FiniteMedianAlgebra::from(fixture::boolean_structure(1));
  auto s = separate(b, set_of(2, {0}), set_of(2, {1}));
  EXPECT_TRUE(s.test(0));
  EXPECT_FALSE(s.test(1));
}

TEST(Separate, DisjointConvexSetsAlwaysSeparated) {
  auto a = fixture::graph_algebra(grid_graph(3, 3));
  gen::for_seeds(300, 40, [&](std::uint64_t, gen::Rng& rng) {
    int x = std::uniform_int_distribution<int>(0, 8)(rng);
    int y = std::uniform_int_distribution<int>(0, 8)(rng);
    int z = std::uniform_int_distribution<int>(0, 8)(rng);
    PointSet c1 = convex_hull(a, set_of(9, {x}));
    PointSet c2 = convex_hull(a, set_of(9, {y, z}));
    if (c1.intersects(c2)) return;
    PointSet h = separate(a, c1, c2);
    EXPECT_TRUE(c1.is_subset_of(h));
    EXPECT_FALSE(c2.intersects(h));
    EXPECT_TRUE(is_convex(a, h));
    EXPECT_TRUE(is_convex(a, ~h));
  });
}

TEST(Closure, FixpointExamples) {
  auto b = FiniteMedianAlgebra::from(fixture::boolean_structure(3));
  EXPECT_EQ(median_closure(b, singleton(8, 5)), singleton(8, 5));
  EXPECT_EQ(median_closure(b, full_set(8)), full_set(8));
  // {1},{2},{3}: majority of the three singletons is the empty set.
  auto c = median_closure(b, set_of(8, {1, 2, 4}));
  EXPECT_EQ(c, set_of(8, {0, 1, 2, 4}));
  EXPECT_TRUE(is_median_stable(b, c));
  EXPECT_FALSE(is_median_stable(b, set_of(8, {1, 2, 4})));
}

TEST(Morphism, IdentityConstantAndFolding) {
  auto p3 = fixture::graph_algebra(path_graph(3));
  auto p2 = fixture::graph_algebra(path_graph(2));
  std::vector<int> id{0, 1, 2}, constant{1, 1, 1}, fold{0, 1, 0};
  EXPECT_TRUE(is_median_morphism(id, p3, p3));
  EXPECT_TRUE(is_median_morphism(constant, p3, p3));
  bool by_intervals = preserves_intervals(fold, p3, p2);
  bool by_halfspaces = pulls_back_halfspaces(fold, p3, p2);
  EXPECT_EQ(by_intervals, by_halfspaces);
  EXPECT_FALSE(by_intervals);
  std::vector<int> squash{0, 0, 1};
  EXPECT_TRUE(is_median_morphism(squash, p3, p2));
}

TEST(Morphism, CriteriaAgreeOnRandomMaps) {
  auto a = fixture::graph_algebra(cycle_graph(4));
  auto b = fixture::graph_algebra(path_graph(3));
  gen::for_seeds(400, 81, [&](std::uint64_t seed, gen::Rng&) {
    std::vector<int> f(4);
    std::uint64_t code = seed - 400;
    for (auto& v : f) {
      v = static_cast<int>(code % 3);
      code /= 3;
    }
    EXPECT_EQ(preserves_intervals(f, a, b), pulls_back_halfspaces(f, a, b));
  });
}
