#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace medgeo {

enum class NormKind { Euclidean, L1, Linf, P };

struct Norm {
  NormKind kind = NormKind::Euclidean;
  double p = 2;

  static Norm euclidean() { return {}; }
  static Norm l1() { return {NormKind::L1, 1}; }
  static Norm linf() { return {NormKind::Linf, 0}; }
  static Norm lp(double p);

  double operator()(const Eigen::VectorXd& v) const;
  double distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
    return (*this)(a - b);
  }
};

/// "euclidean", "l1", "linf", or "p=<value>".
Norm parse_norm(const std::string& text);
std::string to_string(const Norm& norm);

struct PointCloud {
  std::vector<Eigen::VectorXd> points;
  Norm norm;

  /// Throws InputError unless nonempty, of one dimension, and finite.
  void validate() const;
  Eigen::Index dimension() const { return points.empty() ? 0 : points.front().size(); }
};

/// max over the cloud of the distance to x.
double circumradius(const PointCloud& c, const Eigen::VectorXd& x);

inline constexpr std::uint64_t kDefaultCircumcenterSeed = 7;

struct CircumcenterResult {
  Eigen::VectorXd center;
  double radius = 0;
  int iterations = 0;
  /// circumradius(center) re-measured over all points.
  double certificate = 0;
  std::uint64_t seed = kDefaultCircumcenterSeed;
  /// circumradius at each iterate's center, and the distance between
  /// successive centers.
  std::vector<double> radii;
  std::vector<double> steps;
};

/// Smallest enclosing ball for the Euclidean norm. A seeded core set is
/// grown by the farthest point until every point lies within radius + tol;
/// each core set's ball is solved exactly by randomized incremental
/// construction. Other norms raise UnsupportedModel; tol <= 0 is an
/// InputError.
CircumcenterResult circumcenter(const PointCloud& c, double tol = 1e-9,
                                std::uint64_t seed = kDefaultCircumcenterSeed);

/// Ball whose boundary passes through every point of `support`, centered in
/// their affine hull (least squares when they are affinely dependent).
struct Ball {
  Eigen::VectorXd center;
  double radius = 0;
};
Ball circumscribed_ball(const std::vector<Eigen::VectorXd>& support);

struct CnReport {
  double lhs = 0;  // |z m_xy|
  double rhs = 0;  // sqrt((|zx|^2 + |zy|^2)/2 - |xy|^2/4)
  bool inequality = true;
  bool equality = true;
};

/// Euclidean distances. Equality is expected: it is the parallelogram law.
CnReport check_cn_inequality(const Eigen::VectorXd& z, const Eigen::VectorXd& x,
                             const Eigen::VectorXd& y, double tol = 1e-12);

struct ModulusReport {
  double eps = 0;
  double bound = 0;  // sqrt(1 - eps^2 / 4)
  double worst_ratio = 0;
  std::uint64_t accepted = 0;
  std::uint64_t drawn = 0;
  std::uint64_t seed = 0;
  bool pass = true;
};

/// Samples Euclidean triples in R^dim with |xy| >= eps max(|zx|, |zy|) and
/// reports the largest |z m_xy| / max(|zx|, |zy|). Throws InputError unless
/// eps is in (0, 2].
ModulusReport uniform_convexity_modulus(std::uint64_t samples, double eps, int dim = 2,
                                        std::uint64_t seed = 11, double tol = 1e-12);

using VectorMap = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// ||f((x+y)/2) - (f(x)+f(y))/2|| in the given norm.
double affine_defect(const VectorMap& f, const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                     const Norm& norm = Norm::euclidean());

struct DefectCheck {
  double defect = 0;
  double bound = 0;  // ||x - y|| / 2
  bool within_bound = true;
};

/// For a map flagged as an isometry, also checks defect <= ||x-y||/2 + tol.
DefectCheck affine_defect_checked(const VectorMap& f, const Eigen::VectorXd& x,
                                  const Eigen::VectorXd& y, const Norm& norm, bool isometry,
                                  double tol = 1e-12);

struct ReflectedDefect {
  double defect = 0;
  double reflected = 0;  // defect of f^-1 r f, r the point reflection in (f(x)+f(y))/2
  bool doubles = true;
};

/// The doubling identity for a bijective isometry with inverse `f_inv`.
ReflectedDefect reflected_defect(const VectorMap& f, const VectorMap& f_inv,
                                 const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                 const Norm& norm, double tol = 1e-12);

struct AffineReport {
  bool affine = true;
  double max_defect = 0;
  std::uint64_t pairs = 0;
  std::uint64_t seed = 0;
};

/// Defect vanishes within tol on seeded pairs drawn from [-1, 1]^dim.
AffineReport is_affine(const VectorMap& f, int dim, const Norm& norm = Norm::euclidean(),
                       std::uint64_t pairs = 1000, std::uint64_t seed = 13, double tol = 1e-12);

}  // namespace medgeo
