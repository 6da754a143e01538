#pragma once

#include "medgeo/corpus.hpp"
#include "medgeo/finite_metric.hpp"
#include "medgeo/median_algebra.hpp"
#include "medgeo/median_graph.hpp"
#include "medgeo/point_set.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace fixture {

inline medgeo::PointSet set_of(std::size_t n, std::initializer_list<int> ids) {
  std::vector<int> v(ids);
  return medgeo::make_set(n, v);
}

inline medgeo::FiniteMedianAlgebra graph_algebra(const medgeo::SimpleGraph& g) {
  return medgeo::FiniteMedianAlgebra::from(g.path_metric().interval_structure());
}

/// Power set of {0..k-1}; subset masks are the point ids, [A,B] is
/// {C : A & B <= C <= A | B}.
inline medgeo::IntervalStructure boolean_structure(int k) {
  const int n = 1 << k;
  medgeo::IntervalStructure s;
  for (int a = 0; a < n; ++a) {
    std::string label = "{";
    for (int b = 0; b < k; ++b)
      if (a >> b & 1) label += (label.size() > 1 ? "," : "") + std::to_string(b + 1);
    s.points.push_back(label + "}");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      medgeo::PointSet iv(static_cast<std::size_t>(n));
      for (int c = 0; c < n; ++c)
        if ((a & b & ~c) == 0 && (c & ~(a | b)) == 0) iv.set(static_cast<std::size_t>(c));
      s.intervals.push_back(iv);
    }
  return s;
}

inline medgeo::RationalMatrix rational_matrix(const std::vector<std::vector<int>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  medgeo::RationalMatrix d(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) d(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return d;
}

inline medgeo::FiniteMetric graph_metric(const medgeo::SimpleGraph& g) { return g.path_metric(); }

}  // namespace fixture
