#include "medgeo/convexity.hpp"

#include "medgeo/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

namespace medgeo {

Norm Norm::lp(double p) {
  if (!(p >= 1) || !std::isfinite(p)) throw InputError("p-norm needs 1 <= p < inf");
  return {NormKind::P, p};
}

double Norm::operator()(const Eigen::VectorXd& v) const {
  switch (kind) {
    case NormKind::Euclidean: return v.norm();
    case NormKind::L1: return v.lpNorm<1>();
    case NormKind::Linf: return v.lpNorm<Eigen::Infinity>();
    case NormKind::P: return std::pow(v.array().abs().pow(p).sum(), 1.0 / p);
  }
  return v.norm();
}

Norm parse_norm(const std::string& text) {
  if (text == "euclidean" || text == "l2") return Norm::euclidean();
  if (text == "l1") return Norm::l1();
  if (text == "linf") return Norm::linf();
  if (text.starts_with("p=")) {
    try {
      return Norm::lp(std::stod(text.substr(2)));
    } catch (const std::logic_error&) {
      throw InputError("bad norm '" + text + "'");
    }
  }
  throw InputError("unknown norm '" + text + "'");
}

std::string to_string(const Norm& norm) {
  switch (norm.kind) {
    case NormKind::Euclidean: return "euclidean";
    case NormKind::L1: return "l1";
    case NormKind::Linf: return "linf";
    case NormKind::P: {
      std::string s = std::to_string(norm.p);
      s.erase(s.find_last_not_of('0') + 1);
      if (s.back() == '.') s.pop_back();
      return "p=" + s;
    }
  }
  return "euclidean";
}

void PointCloud::validate() const {
  if (points.empty()) throw InputError("point cloud is empty");
  const auto d = points.front().size();
  if (d == 0) throw InputError("points have no coordinates");
  for (const auto& p : points) {
    if (p.size() != d) throw InputError("points have different dimensions");
    if (!p.allFinite()) throw InputError("point has a non-finite coordinate");
  }
}

double circumradius(const PointCloud& c, const Eigen::VectorXd& x) {
  double r = 0;
  for (const auto& p : c.points) r = std::max(r, c.norm.distance(p, x));
  return r;
}

Ball circumscribed_ball(const std::vector<Eigen::VectorXd>& support) {
  if (support.empty()) return {Eigen::VectorXd(), -1};
  const Eigen::VectorXd& p0 = support.front();
  if (support.size() == 1) return {p0, 0};
  const auto k = static_cast<Eigen::Index>(support.size() - 1);
  Eigen::MatrixXd a(p0.size(), k);
  for (Eigen::Index i = 0; i < k; ++i) a.col(i) = support[static_cast<std::size_t>(i + 1)] - p0;
  Eigen::MatrixXd gram = a.transpose() * a;
  Eigen::VectorXd rhs = 0.5 * gram.diagonal();
  Eigen::VectorXd lambda = gram.completeOrthogonalDecomposition().solve(rhs);
  Ball b{p0 + a * lambda, 0};
  for (const auto& p : support) b.radius = std::max(b.radius, (p - b.center).norm());
  return b;
}

namespace {

bool contains(const Ball& b, const Eigen::VectorXd& p) {
  if (b.radius < 0) return false;
  return (p - b.center).norm() <= b.radius * (1 + 1e-12) + 1e-12;
}

Ball welzl(const std::vector<Eigen::VectorXd>& pts, std::size_t count,
           std::vector<Eigen::VectorXd>& boundary, std::size_t dim) {
  if (count == 0 || boundary.size() == dim + 1) return circumscribed_ball(boundary);
  const Eigen::VectorXd& p = pts[count - 1];
  Ball b = welzl(pts, count - 1, boundary, dim);
  if (contains(b, p)) return b;
  boundary.push_back(p);
  b = welzl(pts, count - 1, boundary, dim);
  boundary.pop_back();
  return b;
}

}  // namespace

CircumcenterResult circumcenter(const PointCloud& c, double tol, std::uint64_t seed) {
  c.validate();
  if (c.norm.kind != NormKind::Euclidean)
    throw UnsupportedModel("circumcenters are computed for the euclidean norm only, got " +
                           to_string(c.norm));
  if (!(tol > 0)) throw InputError("tolerance must be positive");
  CircumcenterResult out;
  out.seed = seed;
  std::mt19937_64 rng(seed);
  const std::size_t n = c.points.size();
  const auto dim = static_cast<std::size_t>(c.dimension());

  std::vector<std::size_t> core{std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)};
  std::vector<bool> in_core(n, false);
  in_core[core.front()] = true;
  Ball ball;
  for (;;) {
    std::vector<Eigen::VectorXd> pts;
    for (auto i : core) pts.push_back(c.points[i]);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<Eigen::VectorXd> boundary;
    Ball next = welzl(pts, pts.size(), boundary, dim);
    if (out.iterations > 0) out.steps.push_back((next.center - ball.center).norm());
    ball = std::move(next);
    ++out.iterations;
    std::size_t far = 0;
    double far_dist = -1;
    for (std::size_t i = 0; i < n; ++i) {
      double d = (c.points[i] - ball.center).norm();
      if (d > far_dist) {
        far_dist = d;
        far = i;
      }
    }
    out.radii.push_back(far_dist);
    if (far_dist <= ball.radius + tol || in_core[far]) break;
    in_core[far] = true;
    core.push_back(far);
  }
  out.center = ball.center;
  out.radius = ball.radius;
  out.certificate = circumradius(c, out.center);
  return out;
}

CnReport check_cn_inequality(const Eigen::VectorXd& z, const Eigen::VectorXd& x,
                             const Eigen::VectorXd& y, double tol) {
  if (z.size() != x.size() || x.size() != y.size())
    throw InputError("points have different dimensions");
  CnReport r;
  const Eigen::VectorXd mid = 0.5 * (x + y);
  r.lhs = (z - mid).norm();
  const double zx = (z - x).squaredNorm(), zy = (z - y).squaredNorm(), xy = (x - y).squaredNorm();
  r.rhs = std::sqrt(std::max(0.0, (zx + zy) / 2 - xy / 4));
  r.inequality = r.lhs <= r.rhs + tol;
  r.equality = std::abs(r.lhs - r.rhs) <= tol;
  return r;
}

namespace {

Eigen::VectorXd uniform_cube(std::mt19937_64& rng, int dim) {
  std::uniform_real_distribution<double> u(-1, 1);
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = u(rng);
  return v;
}

Eigen::VectorXd unit_direction(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  Eigen::VectorXd v(dim);
  do {
    for (int i = 0; i < dim; ++i) v(i) = g(rng);
  } while (v.norm() == 0);
  return v.normalized();
}

}  // namespace

ModulusReport uniform_convexity_modulus(std::uint64_t samples, double eps, int dim,
                                        std::uint64_t seed, double tol) {
  if (!(eps > 0 && eps <= 2)) throw InputError("eps must lie in (0, 2]");
  if (dim < 1) throw InputError("dimension must be positive");
  ModulusReport r;
  r.eps = eps;
  r.bound = std::sqrt(std::max(0.0, 1 - eps * eps / 4));
  r.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radius(0, 1);
  const std::uint64_t max_draws = samples * 1000;
  while (r.accepted < samples && r.drawn < max_draws) {
    ++r.drawn;
    Eigen::VectorXd z = uniform_cube(rng, dim);
    Eigen::VectorXd x = z + (1 - radius(rng)) * unit_direction(rng, dim);
    Eigen::VectorXd y = z + (1 - radius(rng)) * unit_direction(rng, dim);
    const double far = std::max((z - x).norm(), (z - y).norm());
    if ((x - y).norm() < eps * far) continue;
    ++r.accepted;
    r.worst_ratio = std::max(r.worst_ratio, (z - 0.5 * (x + y)).norm() / far);
  }
  r.pass = r.worst_ratio <= r.bound + tol;
  return r;
}

double affine_defect(const VectorMap& f, const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                     const Norm& norm) {
  return norm(f(0.5 * (x + y)) - 0.5 * (f(x) + f(y)));
}

DefectCheck affine_defect_checked(const VectorMap& f, const Eigen::VectorXd& x,
                                  const Eigen::VectorXd& y, const Norm& norm, bool isometry,
                                  double tol) {
  DefectCheck c;
  c.defect = affine_defect(f, x, y, norm);
  c.bound = norm.distance(x, y) / 2;
  if (isometry) c.within_bound = c.defect <= c.bound + tol;
  return c;
}

ReflectedDefect reflected_defect(const VectorMap& f, const VectorMap& f_inv,
                                 const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                 const Norm& norm, double tol) {
  const Eigen::VectorXd fx = f(x), fy = f(y);
  auto reflect = [&](const Eigen::VectorXd& w) -> Eigen::VectorXd { return fx + fy - w; };
  VectorMap dagger = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
    return f_inv(reflect(f(v)));
  };
  ReflectedDefect r;
  r.defect = affine_defect(f, x, y, norm);
  r.reflected = affine_defect(dagger, x, y, norm);
  r.doubles = std::abs(r.reflected - 2 * r.defect) <= tol;
  return r;
}

AffineReport is_affine(const VectorMap& f, int dim, const Norm& norm, std::uint64_t pairs,
                       std::uint64_t seed, double tol) {
  AffineReport r;
  r.seed = seed;
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < pairs; ++i) {
    Eigen::VectorXd x = uniform_cube(rng, dim), y = uniform_cube(rng, dim);
    r.max_defect = std::max(r.max_defect, affine_defect(f, x, y, norm));
    ++r.pairs;
  }
  r.affine = r.max_defect <= tol;
  return r;
}

}  // namespace medgeo
