#pragma once

#include "medgeo/finite_metric.hpp"
#include "medgeo/median_algebra.hpp"
#include "medgeo/point_set.hpp"

#include <cstdint>
#include <map>
#include <unordered_map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace medgeo {

using Edge = std::pair<int, int>;

/// Simple undirected graph. Edges are stored once with first < second.
class SimpleGraph {
 public:
  /// Throws InputError on loops, repeated edges or out-of-range endpoints.
  SimpleGraph(Labels vertices, std::vector<Edge> edges);

  std::size_t size() const { return labels_.size(); }
  const Labels& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const;
  int index_of(const std::string& label) const { return find_label(labels_, label); }

  bool connected() const;
  /// Unit-length BFS distances from every vertex; -1 when unreachable.
  Matrix<int> distances() const;
  /// Throws InputError when disconnected.
  FiniteMetric path_metric() const;

 private:
  Labels labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// Vertex lookup by wall coordinates. Coordinates up to 64 walls are packed
/// into words (dense table up to 22 walls); wider ones fall back to an
/// ordered map over bitsets.
class CoordinateIndex {
 public:
  CoordinateIndex() = default;
  CoordinateIndex(std::vector<PointSet> coords, std::size_t walls);

  std::size_t walls() const { return walls_; }
  const PointSet& coordinates(int v) const { return coords_[static_cast<std::size_t>(v)]; }
  /// Vertex with these coordinates, or -1.
  int find(const PointSet& c) const;
  /// Vertex at the coordinatewise majority of x, y, z, or -1.
  int majority(int x, int y, int z) const;
  /// Coordinates of t lie between those of x and y in every wall.
  bool between(int x, int t, int y) const;

 private:
  std::size_t walls_ = 0;
  std::vector<PointSet> coords_;
  std::vector<std::uint64_t> packed_;
  std::vector<int> dense_;
  std::unordered_map<std::uint64_t, int> sparse_;
  std::map<PointSet, int> wide_;
};

/// A graph whose path metric has been certified median, together with the
/// wall structure read off its edges. Medians and intervals are answered
/// through the wall coordinates, so no cubic table is stored.
class MedianGraphCert {
 public:
  MedianGraphCert(SimpleGraph g, Matrix<int> d, std::vector<Halfspace> walls,
                  std::vector<int> edge_wall);

  const SimpleGraph& graph() const { return graph_; }
  std::size_t size() const { return graph_.size(); }
  const Labels& labels() const { return graph_.labels(); }
  const Matrix<int>& distances() const { return distances_; }
  int dist(int x, int y) const { return distances_(x, y); }
  /// Walls {H_xy, H_yx}, each stored by the side holding vertex 0, in
  /// canonical (lexicographic) order.
  const std::vector<Halfspace>& walls() const { return walls_; }
  /// Wall crossed by each edge, parallel to graph().edges().
  const std::vector<int>& edge_wall() const { return edge_wall_; }
  const CoordinateIndex& coordinates() const { return index_; }

  int median(int x, int y, int z) const;
  bool in_interval(int t, int x, int y) const { return index_.between(x, t, y); }
  PointSet interval(int x, int y) const;

  /// Full metric-side view; cubic in size, for small graphs.
  MedianMetric median_metric() const;

 private:
  SimpleGraph graph_;
  Matrix<int> distances_;
  std::vector<Halfspace> walls_;
  std::vector<int> edge_wall_;
  CoordinateIndex index_;
};

struct NotMedianGraph {
  MetricClass kind;
  std::array<int, 3> witness;
  PointSet intersection;
};

using GraphCertification = std::variant<MedianGraphCert, NotMedianGraph>;

/// Throws InputError on disconnected input. The graph is median iff it is
/// bipartite, its edge-wall coordinates reproduce the path metric, and the
/// majority of every triple's coordinates is a vertex. Any rejection is
/// re-derived through classify() to obtain the witness triple; a
/// disagreement between the two routes raises ConsistencyError.
GraphCertification certify_median_graph(const SimpleGraph& g);

/// As certify_median_graph, but a non-median graph is an InputError.
MedianGraphCert require_median_graph(const SimpleGraph& g);

const std::vector<Halfspace>& edge_halfspaces(const MedianGraphCert& g);

/// H_xy = {z : d(z,x) < d(z,y)} for an edge xy.
PointSet edge_halfspace(const MedianGraphCert& g, int x, int y);

/// Number of walls with x and y on different sides.
int separating_walls(const MedianGraphCert& g, int x, int y);

/// Per vertex, bit i records whether the vertex sits on a different side of
/// wall i than `base`.
std::vector<PointSet> wall_coordinates(const MedianGraphCert& g, int base = 0);

/// All four side intersections are nonempty.
bool walls_cross(const Halfspace& a, const Halfspace& b);

/// Size of the largest family of pairwise-crossing walls.
int max_crossing_family(const MedianGraphCert& g);

struct CubeComplex {
  /// dimension -> cubes, each cube a sorted vertex list; dims 1..max_dim.
  std::map<int, std::vector<std::vector<int>>> cubes;
  int max_dim = 0;

  std::size_t count(int dim) const {
    auto it = cubes.find(dim);
    return it == cubes.end() ? 0 : it->second.size();
  }
};

/// Fills in every cube of dimension <= max_dim. A (k+1)-cube is the vertex
/// set realizing all orientations of k+1 walls with the rest fixed, built
/// from a k-cube extended across one more wall. Default max_dim is
/// max_crossing_family(g).
CubeComplex fill_cubes(const MedianGraphCert& g, std::optional<int> max_dim = std::nullopt);

}  // namespace medgeo
