#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include "medgeo/corpus.hpp"
#include "medgeo/errors.hpp"
#include "medgeo/wall_space.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace medgeo;
using fixture::set_of;

namespace {

WallSpace c4_walls() {
  return WallSpace({"a", "b", "c", "d"}, {set_of(4, {0, 1}), set_of(4, {0, 3})});
}

WallSpace nested_line(int n) {
  Labels pts;
  std::vector<PointSet> sides;
  for (int i = 0; i < n; ++i) pts.push_back("q" + std::to_string(i));
  for (int cut = 1; cut < n; ++cut) {
    PointSet s(static_cast<std::size_t>(n));
    for (int i = 0; i < cut; ++i) s.set(static_cast<std::size_t>(i));
    sides.push_back(s);
  }
  return WallSpace(pts, sides);
}

}  // namespace

TEST(WallSpace, CanonicalizesAndAddsTrivialWall) {
  WallSpace w({"a", "b", "c"}, {set_of(3, {2}), set_of(3, {0})});
  EXPECT_TRUE(w.trivial_added());
  ASSERT_EQ(w.walls().size(), 3u);
  for (const auto& wall : w.walls()) EXPECT_TRUE(wall.side.test(0));
  EXPECT_EQ(w.walls()[w.trivial_index()].side, full_set(3));
  EXPECT_EQ(w.find_wall(set_of(3, {2})), w.find_wall(set_of(3, {0, 1})));
  EXPECT_EQ(w.find_wall(set_of(3, {1})), -1);
}

TEST(WallSpace, RejectsBadInput) {
  EXPECT_THROW(WallSpace({"a", "b", "c"}, {set_of(3, {0})}), InputError);
  EXPECT_THROW(WallSpace({"a", "b"}, {set_of(2, {0}), set_of(2, {1})}), InputError);
  EXPECT_THROW(WallSpace({}, {}), InputError);
}

TEST(WallMetric, Examples) {
  WallSpace k2({"a", "b"}, {set_of(2, {0})});
  EXPECT_EQ(wall_metric(k2, 0, 0), 0);
  EXPECT_EQ(wall_metric(k2, 0, 1), 1);
  auto c4 = require_median_graph(cycle_graph(4));
  auto w = wall_space_of(c4);
  EXPECT_EQ(wall_metric(w, 0, 2), 2);
  EXPECT_EQ(wall_metric(w, 1, 3), 2);
}

TEST(WallMetric, CountsSeparatingWallsOnRandomSpaces) {
  gen::for_seeds(500, 10, [](std::uint64_t seed, gen::Rng&) {
    auto w = random_wall_space(6, 7, seed);
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y) {
        int count = 0;
        for (const auto& wall : w.walls())
          if (wall.side.test(static_cast<std::size_t>(x)) != wall.side.test(static_cast<std::size_t>(y))) ++count;
        EXPECT_EQ(wall_metric(w, x, y), count);
        EXPECT_EQ(wall_metric(w, x, y), wall_metric(w, y, x));
      }
  });
}

TEST(WallMorphism, IdentityConstantAndCollapse) {
  auto w = c4_walls();
  std::vector<int> id{0, 1, 2, 3}, constant{2, 2, 2, 2};
  EXPECT_TRUE(is_wall_morphism(id, w, w));
  EXPECT_TRUE(is_wall_morphism(constant, w, w));

  WallSpace line({"a", "b", "c"}, {set_of(3, {0}), set_of(3, {0, 1})});
  WallSpace k2({"u", "v"}, {set_of(2, {0})});
  std::vector<int> ends_together{0, 1, 0};
  EXPECT_FALSE(is_wall_morphism(ends_together, line, k2));
  std::vector<int> split{0, 0, 1};
  EXPECT_TRUE(is_wall_morphism(split, line, k2));
}

TEST(Orientation, PrincipalAndTrivial) {
  WallSpace k2({"a", "b"}, {set_of(2, {0})});
  auto oa = principal_orientation(k2, 0);
  const auto a_wall = static_cast<std::size_t>(k2.find_wall(set_of(2, {0})));
  EXPECT_EQ(chosen_side(k2, oa, a_wall), set_of(2, {0}));
  EXPECT_EQ(chosen_side(k2, oa, k2.trivial_index()), full_set(2));
  EXPECT_EQ(chosen_side(k2, principal_orientation(k2, 1), k2.trivial_index()), full_set(2));

  auto w = c4_walls();
  for (int x = 0; x < 4; ++x) {
    EXPECT_TRUE(is_consistent(w, principal_orientation(w, x)));
    EXPECT_TRUE(is_upward_closed(w, principal_orientation(w, x)));
  }
}

TEST(Orientation, ConsistencyMatchesUpwardClosure) {
  gen::for_seeds(600, 10, [](std::uint64_t seed, gen::Rng&) {
    auto w = random_wall_space(5, 6, seed);
    auto expected = oracle::consistent_orientations(w);
    const std::size_t count = w.walls().size();
    for (std::uint64_t mask = 0; mask < (1ULL << count); ++mask) {
      Orientation o(count);
      for (std::size_t i = 0; i < count; ++i)
        if (mask >> i & 1) o.set(i);
      bool consistent = is_consistent(w, o);
      EXPECT_EQ(consistent, expected.count(o) > 0);
      if (!o.test(w.trivial_index())) EXPECT_EQ(consistent, is_upward_closed(w, o));
    }
  });
}

TEST(Cubulate, TwoPointsGiveAnEdge) {
  WallSpace k2({"a", "b"}, {set_of(2, {0})});
  auto r = cubulate(k2);
  EXPECT_EQ(r.cert.size(), 2u);
  EXPECT_EQ(r.cert.graph().edges().size(), 1u);
  EXPECT_EQ(r.cert.labels(), (Labels{"v0", "v1"}));
}

TEST(Cubulate, SquareWalls) {
  auto r = cubulate(c4_walls());
  EXPECT_EQ(r.cert.size(), 4u);
  EXPECT_EQ(r.cert.graph().edges().size(), 4u);
  EXPECT_TRUE(oracle::find_isomorphism(4, r.cert.graph().edges(), 4, cycle_graph(4).edges()));
  std::set<int> image(r.embedding.begin(), r.embedding.end());
  EXPECT_EQ(image.size(), 4u);
}

TEST(Cubulate, NestedWallsGivePath) {
  auto r = cubulate(nested_line(5));
  EXPECT_EQ(r.cert.size(), 5u);
  EXPECT_TRUE(oracle::find_isomorphism(5, r.cert.graph().edges(), 5, path_graph(5).edges()));
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) EXPECT_EQ(r.cert.dist(r.embedding[x], r.embedding[y]), std::abs(x - y));
}

TEST(Cubulate, MedianGraphRoundTrip) {
  std::vector<SimpleGraph> graphs{path_graph(4), cycle_graph(4), hypercube_graph(3), grid_graph(3, 3),
                                  random_tree(15, 2), star_graph(4)};
  for (const auto& g : graphs) {
    auto cert = require_median_graph(g);
    auto r = cubulate(wall_space_of(cert));
    ASSERT_EQ(r.cert.size(), g.size());
    auto iso = oracle::find_isomorphism(static_cast<int>(g.size()), g.edges(),
                                        static_cast<int>(r.cert.size()), r.cert.graph().edges());
    ASSERT_TRUE(iso);
    std::set<int> image(r.embedding.begin(), r.embedding.end());
    EXPECT_EQ(image.size(), g.size());
    for (auto [u, v] : g.edges()) EXPECT_TRUE(r.cert.graph().adjacent(r.embedding[u], r.embedding[v]));
  }
}

TEST(Cubulate, FlipBfsFindsEveryConsistentOrientation) {
  gen::for_seeds(700, 30, [](std::uint64_t seed, gen::Rng& rng) {
    int points = std::uniform_int_distribution<int>(3, 7)(rng);
    int walls = std::uniform_int_distribution<int>(points - 1, std::min(9, (1 << (points - 1)) - 1))(rng);
    auto w = random_wall_space(points, walls, seed);
    auto r = cubulate(w);
    auto expected = oracle::consistent_orientations(w);
    std::set<PointSet> got(r.orientations.begin(), r.orientations.end());
    EXPECT_EQ(got, expected) << "seed " << seed;
    EXPECT_TRUE(oracle::is_median_graph(static_cast<int>(r.cert.size()), r.cert.graph().edges()));
    for (int x = 0; x < points; ++x)
      for (int y = 0; y < points; ++y)
        EXPECT_EQ(r.cert.dist(r.embedding[x], r.embedding[y]), wall_metric(w, x, y));
  });
}

TEST(Cubulate, VertexNamesSortedBitStrings) {
  auto w = random_wall_space(5, 5, 3);
  auto r = cubulate(w);
  EXPECT_TRUE(std::is_sorted(r.cert.labels().begin(), r.cert.labels().end()));
  for (const auto& name : r.cert.labels()) {
    EXPECT_EQ(name.size(), w.walls().size());
    EXPECT_EQ(name[0], 'v');
  }
}

TEST(Cubulate, CapEnforced) {
  auto w = nested_line(8);
  EXPECT_THROW(cubulate(w, 5), ResourceError);
  EXPECT_NO_THROW(cubulate(w, 7));
}

TEST(Extend, IdentityAndConstant) {
  auto w = c4_walls();
  std::vector<int> id{0, 1, 2, 3};
  auto e = extend_morphism(id, w, w);
  for (std::size_t v = 0; v < e.map.size(); ++v) EXPECT_EQ(e.map[v], static_cast<int>(v));
  std::vector<int> constant{1, 1, 1, 1};
  auto c = extend_morphism(constant, w, w);
  std::set<int> image(c.map.begin(), c.map.end());
  EXPECT_EQ(image.size(), 1u);
  EXPECT_EQ(*image.begin(), c.target.embedding[1]);
}

TEST(Extend, QuotientOntoEdge) {
  auto w = c4_walls();
  WallSpace k2({"u", "v"}, {set_of(2, {0})});
  std::vector<int> f{0, 0, 1, 1};
  auto e = extend_morphism(f, w, k2);
  const auto& src = e.source.cert;
  const auto& dst = e.target.cert;
  const int n = static_cast<int>(src.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto iv = oracle::interval(src.median_metric().metric().distances(), x, y);
      auto target_iv = oracle::interval(dst.median_metric().metric().distances(), e.map[x], e.map[y]);
      for (int t : iv)
        EXPECT_NE(std::find(target_iv.begin(), target_iv.end(), e.map[t]), target_iv.end());
    }
  std::vector<int> other{0, 1, 1, 0};
  std::vector<int> diagonal{0, 1, 0, 1};
  EXPECT_NO_THROW(extend_morphism(other, w, k2));
  EXPECT_THROW(extend_morphism(diagonal, w, k2), InputError);
}
