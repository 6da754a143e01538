#pragma once

// Brute-force reference implementations. Each one recomputes its answer from
// raw distances, edges or sets, without calling the library routine it is
// used to check.

#include "medgeo/median_algebra.hpp"
#include "medgeo/median_graph.hpp"
#include "medgeo/rational.hpp"
#include "medgeo/wall_space.hpp"

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using medgeo::PointSet;
using medgeo::Rational;
using medgeo::RationalMatrix;

/// Every subset S with S and its complement convex, as sides holding point
/// 0 (the trivial wall included), sorted by member list.
std::vector<std::vector<int>> halfspaces(const medgeo::IntervalStructure& s);

/// {t : d(x,t) + d(t,y) = d(x,y)}.
std::vector<int> interval(const RationalMatrix& d, int x, int y);

/// Points common to the three pairwise intervals of x, y, z.
std::vector<int> medians(const RationalMatrix& d, int x, int y, int z);

enum class Kind { Median, Modular, Neither };
Kind classify(const RationalMatrix& d);

/// Unit-edge BFS distances.
std::vector<std::vector<int>> bfs_distances(int n, const std::vector<medgeo::Edge>& edges);

/// Path-metric median test by counting common interval points.
bool is_median_graph(int n, const std::vector<medgeo::Edge>& edges);

/// Consistent orientations over the nontrivial walls of w, found by trying
/// all 2^W choices. Bit i refers to wall i of w.walls(); the trivial wall's
/// bit is always clear.
std::set<PointSet> consistent_orientations(const medgeo::WallSpace& w);

/// Vertex sets of all subgraphs isomorphic to Q_k, found by backtracking
/// over images of the cube's vertices.
std::set<std::vector<int>> cube_subgraphs(int n, const std::vector<medgeo::Edge>& edges, int k);

/// Vertex bijection a -> b preserving adjacency, if one exists.
std::optional<std::vector<int>> find_isomorphism(int na, const std::vector<medgeo::Edge>& ea,
                                                 int nb, const std::vector<medgeo::Edge>& eb);

struct Ball {
  Eigen::VectorXd center;
  double radius = 0;
};
/// Smallest enclosing ball by trying every support set of at most d+1
/// points (d <= 3).
Ball min_enclosing_ball(const std::vector<Eigen::VectorXd>& points);

/// sum alpha_i alpha_j d_ij computed term by term.
Rational form(const RationalMatrix& d, const std::vector<Rational>& alpha);

/// Largest form value over integer vectors summing to 1 with entries in
/// [-bound, bound], by full enumeration.
Rational hypermetric_max(const RationalMatrix& d, int bound);

/// A family of pairwise intersecting convex sets with empty intersection,
/// found by depth-first search over all convex sets.
std::optional<std::vector<PointSet>> helly_counterexample(const RationalMatrix& d);

/// Number of convex subsets, empty set included.
std::size_t count_convex_sets(const RationalMatrix& d);

}  // namespace oracle
