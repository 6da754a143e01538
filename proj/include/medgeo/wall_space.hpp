#pragma once

#include "medgeo/median_algebra.hpp"
#include "medgeo/median_graph.hpp"
#include "medgeo/point_set.hpp"

#include <span>
#include <vector>

namespace medgeo {

/// Finite set with a collection of walls. Each wall is stored by the side
/// holding point 0, and the collection is kept in canonical (lexicographic)
/// order with the trivial wall {X, empty} present.
class WallSpace {
 public:
  /// Sides may be given as either half of each wall. Duplicate walls and
  /// pairs of points no wall separates are InputErrors. The trivial wall is
  /// added when absent; trivial_added() reports that.
  WallSpace(Labels points, std::vector<PointSet> sides);

  std::size_t size() const { return points_.size(); }
  const Labels& points() const { return points_; }
  const std::vector<Halfspace>& walls() const { return walls_; }
  std::size_t trivial_index() const { return trivial_; }
  bool trivial_added() const { return trivial_added_; }
  int index_of(const std::string& label) const { return find_label(points_, label); }

  /// Index of the wall having `side` as one of its halves, or -1.
  int find_wall(const PointSet& side) const;

 private:
  Labels points_;
  std::vector<Halfspace> walls_;
  std::size_t trivial_ = 0;
  bool trivial_added_ = false;
};

/// Halfspaces containing x, as a bitset over 2 * walls slots: slot 2i is
/// wall i's stored side, slot 2i+1 its complement.
PointSet principal_halfspaces(const WallSpace& w, int x);

/// Number of walls separating x and y. Also computes half the symmetric
/// difference of the two halfspace collections and raises ConsistencyError
/// if the two counts ever differ.
int wall_metric(const WallSpace& w, int x, int y);

/// Preimage of every halfspace of w2 is a halfspace of w1 (the empty set
/// and the whole set count, being sides of the trivial wall).
bool is_wall_morphism(std::span<const int> f, const WallSpace& w1, const WallSpace& w2);

/// Orientation over the walls of a space: bit i set means the side NOT
/// holding point 0 is chosen for wall i.
using Orientation = PointSet;

Orientation principal_orientation(const WallSpace& w, int x);

PointSet chosen_side(const WallSpace& w, const Orientation& o, std::size_t wall);

/// Every two chosen sides intersect.
bool is_consistent(const WallSpace& w, const Orientation& o);

/// If a chosen side is contained in a side of another wall, that side is
/// chosen too.
bool is_upward_closed(const WallSpace& w, const Orientation& o);

/// Wall space of a median graph: its vertices with the edge walls.
WallSpace wall_space_of(const MedianGraphCert& g);

inline constexpr std::size_t kDefaultWallCap = 24;

struct CubulationResult {
  MedianGraphCert cert;
  /// Orientation of each graph vertex, in vertex order.
  std::vector<Orientation> orientations;
  /// point -> vertex
  std::vector<int> embedding;
  /// input wall -> graph wall index in cert.walls; -1 for the trivial wall.
  std::vector<int> wall_correspondence;
};

/// Vertices are the consistent orientations reached from the principal ones
/// by single-wall flips; edges join orientations differing on one wall.
/// Vertices are named "v" + bit string over the nontrivial walls and sorted
/// by name. Throws ResourceError beyond `cap` nontrivial walls, and
/// ConsistencyError if any guaranteed property of the output fails.
CubulationResult cubulate(const WallSpace& w, std::size_t cap = kDefaultWallCap);

struct MorphismExtension {
  CubulationResult source;
  CubulationResult target;
  /// source vertex -> target vertex
  std::vector<int> map;
};

/// Extends a wall morphism to the cubulations: an orientation of the source
/// chooses side A' of a target wall exactly when it chooses the preimage of
/// A'. The result is checked to agree with f on embedded points and to
/// preserve intervals.
MorphismExtension extend_morphism(std::span<const int> f, const WallSpace& w1,
                                  const WallSpace& w2, std::size_t cap = kDefaultWallCap);

}  // namespace medgeo
