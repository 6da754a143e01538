#pragma once

#include "medgeo/finite_metric.hpp"
#include "medgeo/point_set.hpp"
#include "medgeo/rational.hpp"
#include "medgeo/wall_space.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace medgeo {

using Permutation = std::vector<int>;

/// Finitely many named permutations of a point set and a basepoint.
struct FiniteAction {
  Labels points;
  std::map<std::string, Permutation> generators;
  int basepoint = 0;

  /// Throws InputError unless every generator is a bijection of the points
  /// and the basepoint is in range.
  void validate() const;
};

/// Whitespace-separated generator names, each optionally followed by "^-1".
/// "g h" acts as g after h; the empty word is the identity.
Permutation evaluate_word(const FiniteAction& a, const std::string& word);

/// Throws InputError naming the first pair whose distance some generator
/// changes.
void require_isometric(const FiniteAction& a, const FiniteMetric& m);

/// Throws InputError naming the first wall some generator does not carry to
/// a wall.
void require_wall_preserving(const FiniteAction& a, const WallSpace& w);

struct MetricDisplacement {
  Rational displacement;  // d(v, gv)
  double embedded = 0;    // squared distance of the GNS images of v and gv
  double error = 0;
  bool pass = true;
};

MetricDisplacement action_displacement_metric(const FiniteAction& a, const MedianMetric& m,
                                              const std::string& word, double tol = 1e-9);

/// (walls separating v and gv, size of the symmetric difference of the
/// halfspaces containing v and gv). ConsistencyError unless the second is
/// twice the first.
std::pair<int, int> action_displacement_walls(const FiniteAction& a, const WallSpace& w,
                                              const std::string& word);

}  // namespace medgeo
