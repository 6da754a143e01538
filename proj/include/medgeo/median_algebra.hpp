#pragma once

#include "medgeo/point_set.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace medgeo {

/// Raw interval data with no axiom guarantees. `intervals` is row-major:
/// interval(x, y) lives at index x * n + y.
struct IntervalStructure {
  Labels points;
  std::vector<PointSet> intervals;

  std::size_t size() const { return points.size(); }
  const PointSet& interval(int x, int y) const {
    return intervals[static_cast<std::size_t>(x) * size() + static_cast<std::size_t>(y)];
  }

  /// Throws InputError unless there are n*n intervals over n points.
  void check_wellformed() const;
};

enum class Axiom { MA1 = 0, MA2 = 1, MA3 = 2, MA4 = 3 };

std::string axiom_name(Axiom a);

struct AxiomResult {
  Axiom axiom;
  bool pass = true;
  std::vector<int> witness;  // first violating tuple in lexicographic order
  std::string detail;
};

struct AxiomReport {
  std::array<AxiomResult, 4> results;

  bool all_pass() const;
  const AxiomResult& operator[](Axiom a) const { return results[static_cast<std::size_t>(a)]; }
};

/// Checks MA1-MA4 over every ordered tuple. MA4 is checked on ordered
/// triples, since for a structure failing MA2 the order of the three
/// intervals matters.
AxiomReport validate_axioms(const IntervalStructure& s);

/// Dense median table, m(x, y, z) for all ordered triples.
class MedianTable {
 public:
  MedianTable() = default;
  explicit MedianTable(std::size_t n) : n_(n), data_(n * n * n, 0) {}

  std::size_t size() const { return n_; }
  int operator()(int x, int y, int z) const { return data_[index(x, y, z)]; }
  void set(int x, int y, int z, int m) { data_[index(x, y, z)] = static_cast<std::uint16_t>(m); }

 private:
  std::size_t index(int x, int y, int z) const {
    return (static_cast<std::size_t>(x) * n_ + static_cast<std::size_t>(y)) * n_ +
           static_cast<std::size_t>(z);
  }
  std::size_t n_ = 0;
  std::vector<std::uint16_t> data_;
};

/// The unique common point of three sets; -1 when the intersection is
/// empty and -k when it has k >= 2 points.
int common_point(const PointSet& a, const PointSet& b, const PointSet& c);

/// A wall {side, side^c} with `side` the part holding the smallest point id.
struct Halfspace {
  PointSet side;

  PointSet complement() const { return ~side; }
  bool operator==(const Halfspace&) const = default;
};

inline constexpr std::size_t kDefaultHalfspaceCap = 16;

/// Interval structure known to satisfy MA1-MA4.
class FiniteMedianAlgebra {
 public:
  /// Validates and promotes. Throws InputError naming the first failed axiom.
  static FiniteMedianAlgebra from(IntervalStructure s);

  std::size_t size() const { return structure_.size(); }
  const Labels& points() const { return structure_.points; }
  const IntervalStructure& structure() const { return structure_; }
  const PointSet& interval(int x, int y) const { return structure_.interval(x, y); }
  int median(int x, int y, int z) const { return medians_(x, y, z); }
  const MedianTable& medians() const { return medians_; }

  int index_of(const std::string& label) const;

 private:
  FiniteMedianAlgebra(IntervalStructure s, MedianTable m)
      : structure_(std::move(s)), medians_(std::move(m)) {}

  IntervalStructure structure_;
  MedianTable medians_;
};

bool is_convex(const FiniteMedianAlgebra& a, const PointSet& s);

/// Smallest convex superset.
PointSet convex_hull(const FiniteMedianAlgebra& a, const PointSet& s);

/// Every wall once, including the trivial one, ordered lexicographically by
/// the side containing point 0. Throws ResourceError above `cap` points.
std::vector<Halfspace> enumerate_halfspaces(const FiniteMedianAlgebra& a,
                                            std::size_t cap = kDefaultHalfspaceCap);

/// First halfspace (in canonical order, trying each wall's side then its
/// complement) that contains c1 and misses c2.
PointSet separate(const FiniteMedianAlgebra& a, const PointSet& c1, const PointSet& c2,
                  std::size_t cap = kDefaultHalfspaceCap);

PointSet median_closure(const FiniteMedianAlgebra& a, const PointSet& s);

bool is_median_stable(const FiniteMedianAlgebra& a, const PointSet& s);

/// f(interval(x, y)) is contained in interval(f(x), f(y)) for every pair.
bool preserves_intervals(std::span<const int> f, const FiniteMedianAlgebra& a,
                         const FiniteMedianAlgebra& b);

/// The preimage of every halfspace of b is a halfspace of a.
bool pulls_back_halfspaces(std::span<const int> f, const FiniteMedianAlgebra& a,
                           const FiniteMedianAlgebra& b, std::size_t cap = kDefaultHalfspaceCap);

/// Interval criterion. When b is within the halfspace cap the halfspace
/// criterion is evaluated too, and a disagreement raises ConsistencyError.
bool is_median_morphism(std::span<const int> f, const FiniteMedianAlgebra& a,
                        const FiniteMedianAlgebra& b, std::size_t cap = kDefaultHalfspaceCap);

}  // namespace medgeo
