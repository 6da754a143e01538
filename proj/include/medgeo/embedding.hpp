#pragma once

#include "medgeo/finite_metric.hpp"
#include "medgeo/median_graph.hpp"
#include "medgeo/point_set.hpp"
#include "medgeo/rational.hpp"

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace medgeo {

/// sum_ij alpha_i alpha_j d(x_i, x_j), exactly.
Rational form_value(const FiniteMetric& m, const RationalVector& alpha);

/// Exact decision of negative definiteness. The centered form J D J (J the
/// averaging projector) agrees with D on zero-sum vectors; -1/2 J D J is
/// factorized with symmetric pivoting.
struct NegDefCertificate {
  RationalMatrix centered_form;
  bool negative_definite = true;
  /// Diagonal of the factorization of -1/2 J D J, in pivot order.
  std::vector<Rational> pivots;
  std::vector<int> permutation;
  /// Zero-sum integer vector with a positive form value, when not negative
  /// definite.
  std::optional<RationalVector> witness;
  Rational witness_value;
};

/// The witness, when present, is re-evaluated against the distances and a
/// mismatch raises ConsistencyError.
NegDefCertificate certify_negative_definite(const FiniteMetric& m);

inline constexpr std::uint64_t kDefaultHypermetricBudget = 50'000'000;

struct HypermetricReport {
  int bound = 2;
  bool pass = true;
  /// Largest form value over integer vectors summing to 1 with entries in
  /// [-bound, bound], and the first vector (in enumeration order) attaining it.
  Rational max_value;
  std::vector<int> worst;
  std::uint64_t checked = 0;
};

/// Exhaustive enumeration. Throws ResourceError when the number of
/// candidate vectors exceeds `budget`, and InputError when bound < 1.
HypermetricReport certify_hypermetric(const FiniteMetric& m, int bound = 2,
                                      std::uint64_t budget = kDefaultHypermetricBudget);

/// Points in R^k with squared Euclidean distances reproducing the metric.
struct GnsEmbedding {
  Labels points;
  Eigen::MatrixXd coordinates;  // one row per point
  double tolerance = 1e-9;
  double max_error = 0;
};

/// Coordinates P^T L sqrt(D) from the exact factorization, verified pairwise.
/// Throws InputError carrying the witness when the metric is not negative
/// definite, ConsistencyError when verification exceeds `tol`.
GnsEmbedding gns_embed(const FiniteMetric& m, double tol = 1e-9);

/// Wall-side indicator vectors. Hamming distance equals path distance, which
/// is re-checked exactly at every pair.
struct L1Embedding {
  Labels points;
  std::size_t dimension = 0;
  std::vector<PointSet> coordinates;
};

L1Embedding l1_embed(const MedianGraphCert& g);

inline constexpr std::size_t kDefaultHellyCap = 12;

struct HellyReport {
  bool holds = true;
  /// Includes the empty set and the whole space.
  std::size_t convex_sets = 0;
  /// Pairwise intersecting convex sets with empty common intersection.
  std::vector<PointSet> witness_family;
  std::optional<std::array<int, 3>> witness_points;
  bool modular = true;
  bool agrees_with_modularity = true;
};

/// Enumerates every convex subset. Helly's property for the convex sets is
/// decided on triples: it holds iff the hulls of the three pairs drawn from
/// any three points always share a point. Throws ResourceError above `cap`.
HellyReport check_helly(const FiniteMetric& m, std::size_t cap = kDefaultHellyCap);

/// Smallest geodesically convex superset of s.
PointSet geodesic_hull(const FiniteMetric& m, const PointSet& s);

inline constexpr std::size_t kDefaultRetractionCap = 64;

struct RetractionStep {
  PointSet domain;
  /// Maximal proper halfspace of the domain.
  PointSet halfspace;
  Rational delta;
  /// Nearest point of the halfspace, per point of the domain; -1 elsewhere.
  std::vector<int> retraction;
};

/// Peels maximal proper halfspaces down to a single point. Each step checks
/// that nearest points are unique and lie between x and every point of the
/// halfspace, that x, y, p_y, p_x is a rectangle off the halfspace, that
/// d(x, p_x) is constant, and the four-case distance law. A failed check
/// raises ConsistencyError; halfspace enumeration is capped at `cap` points.
std::vector<RetractionStep> retraction_decomposition(const MedianMetric& m,
                                                     std::size_t cap = kDefaultRetractionCap);

struct TraceForm {
  Rational value;
  std::vector<Rational> contributions;  // one per step
};

/// Form value rebuilt from the trace: each step contributes
/// 2 delta (sum of weights off H)(sum of weights on H) and pushes the weights
/// forward along the retraction.
TraceForm form_via_trace(const std::vector<RetractionStep>& trace, const RationalVector& alpha);

}  // namespace medgeo
