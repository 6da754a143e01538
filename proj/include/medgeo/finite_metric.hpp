#pragma once

#include "medgeo/median_algebra.hpp"
#include "medgeo/point_set.hpp"
#include "medgeo/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace medgeo {

/// Finite metric space with exact rational distances. Construction checks
/// every metric axiom, so all downstream code may assume them.
class FiniteMetric {
 public:
  FiniteMetric(Labels points, RationalMatrix dist);

  std::size_t size() const { return points_.size(); }
  const Labels& points() const { return points_; }
  const RationalMatrix& distances() const { return dist_; }
  const Rational& dist(int x, int y) const { return dist_(x, y); }
  int index_of(const std::string& label) const { return find_label(points_, label); }

  /// Cached geodesic interval; see geodesic_interval() for the direct scan.
  const PointSet& interval(int x, int y) const {
    return intervals_[static_cast<std::size_t>(x) * size() + static_cast<std::size_t>(y)];
  }
  IntervalStructure interval_structure() const;

  /// Distances times a common denominator, when they fit comfortably in
  /// 64 bits. Sums of up to 64 such entries cannot overflow.
  const std::optional<ScaledIntegers>& scaled() const { return scaled_; }

 private:
  Labels points_;
  RationalMatrix dist_;
  std::optional<ScaledIntegers> scaled_;
  std::vector<PointSet> intervals_;
};

/// {t : d(x,t) + d(t,y) = d(x,y)} by a direct scan in exact arithmetic.
PointSet geodesic_interval(const FiniteMetric& m, int x, int y);

enum class MetricClass { Median, ModularNotMedian, Neither };

std::string to_string(MetricClass c);

struct Classification {
  MetricClass kind = MetricClass::Median;
  /// Offending triple: empty intersection for Neither, several common
  /// points for ModularNotMedian.
  std::optional<std::array<int, 3>> witness;
  PointSet intersection;
};

/// Direct O(n^3) scan over unordered triples.
Classification classify(const FiniteMetric& m);

/// A metric whose geodesic intervals form a median algebra, with the
/// median of every triple memoized at certification time.
class MedianMetric {
 public:
  /// Throws InputError carrying the witness triple when `m` is not median,
  /// ConsistencyError if a memoized median breaks the leg formula.
  static MedianMetric certify(FiniteMetric m);

  const FiniteMetric& metric() const { return metric_; }
  std::size_t size() const { return metric_.size(); }
  const Labels& points() const { return metric_.points(); }
  const Rational& dist(int x, int y) const { return metric_.dist(x, y); }
  int median(int x, int y, int z) const { return medians_(x, y, z); }

  FiniteMedianAlgebra algebra() const;

 private:
  MedianMetric(FiniteMetric m, MedianTable t) : metric_(std::move(m)), medians_(std::move(t)) {}

  FiniteMetric metric_;
  MedianTable medians_;
};

int median_point(const MedianMetric& m, int x, int y, int z);

/// Half of d(x,y) + d(x,z) - d(y,z): the distance from x to the median of
/// x, y, z (also the Gromov product of y, z at x).
Rational leg_length(const FiniteMetric& m, int x, int y, int z);

struct PropertyReport {
  std::string property;
  bool pass = true;
  std::uint64_t checked = 0;
  bool exhaustive = true;
  std::optional<std::uint64_t> seed;
  std::vector<int> witness;
  std::string detail;
};

/// d(x, m) equals leg_length(x, y, z) at every ordered triple and its
/// memoized median.
PropertyReport check_leg_formula(const MedianMetric& m);

/// v in [y,z] implies median(x,y,z) in [x,v], over all (x,y,z,v).
PropertyReport check_colinear_lemma(const MedianMetric& m);

struct LipschitzOptions {
  std::size_t exhaustive_limit = 12;  // sextuples are scanned exhaustively up to this size
  std::uint64_t samples = 200000;
  std::uint64_t seed = 20240607;
};

struct LipschitzReport {
  PropertyReport near_median;  // d(v,m) <= sum d(v,.) - sum d(m,.)
  PropertyReport continuity;   // d(m,m') <= d(x,x') + d(y,y') + d(z,z')
};

LipschitzReport check_median_lipschitz(const MedianMetric& m, const LipschitzOptions& opts = {});

using Rectangle = std::array<int, 4>;

/// Every (x,y,z,t) with y,t in [x,z] and x,z in [y,t]. Each hit is checked
/// for equal opposite sides; a failure raises ConsistencyError.
std::vector<Rectangle> find_rectangles(const MedianMetric& m);

/// l1 sum of two metrics on the Cartesian product. Point (i, j) sits at
/// index i * m2.size() + j and is labelled "(a,b)".
FiniteMetric product_metric(const FiniteMetric& m1, const FiniteMetric& m2);
MedianMetric product(const MedianMetric& m1, const MedianMetric& m2);

/// Finite subset of l1^d.
FiniteMetric l1_metric(const std::vector<RationalVector>& points, Labels labels = {});

/// (f v g) ^ (g v h) ^ (h v f) taken coordinatewise.
RationalVector coordinatewise_median(const RationalVector& f, const RationalVector& g,
                                     const RationalVector& h);

}  // namespace medgeo
