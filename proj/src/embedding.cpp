#include "medgeo/embedding.hpp"

#include "medgeo/errors.hpp"
#include "medgeo/ldl.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace medgeo {

Rational form_value(const FiniteMetric& m, const RationalVector& alpha) {
  const auto n = static_cast<Eigen::Index>(m.size());
  if (alpha.size() != n) throw InputError("coefficient vector has the wrong length");
  Rational total = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (alpha(i) == 0) continue;
    Rational row = 0;
    for (Eigen::Index j = 0; j < n; ++j)
      if (alpha(j) != 0) row += alpha(j) * m.dist(static_cast<int>(i), static_cast<int>(j));
    total += alpha(i) * row;
  }
  return total;
}

namespace {

RationalMatrix centered(const RationalMatrix& d) {
  const Eigen::Index n = d.rows();
  const Rational count(static_cast<long>(n));
  RationalVector mean(n);
  Rational all = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    Rational s = 0;
    for (Eigen::Index j = 0; j < n; ++j) s += d(i, j);
    mean(i) = s / count;
    all += s;
  }
  all /= count * count;
  RationalMatrix c(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) c(i, j) = d(i, j) - mean(i) - mean(j) + all;
  return c;
}

SymmetricPivotLdl<Rational> factor_gram(const RationalMatrix& centered_form) {
  RationalMatrix gram = centered_form * Rational(-1, 2);
  return SymmetricPivotLdl<Rational>(gram);
}

RationalVector integral_zero_sum(const RationalVector& u) {
  const Eigen::Index n = u.size();
  Rational mean = 0;
  for (Eigen::Index i = 0; i < n; ++i) mean += u(i);
  mean /= Rational(static_cast<long>(n));
  RationalVector alpha = u;
  for (Eigen::Index i = 0; i < n; ++i) alpha(i) -= mean;
  Integer den = 1;
  for (Eigen::Index i = 0; i < n; ++i)
    den = boost::multiprecision::lcm(den, Integer(denominator(alpha(i))));
  Integer num = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    Integer v = numerator(alpha(i)) * (den / denominator(alpha(i)));
    num = boost::multiprecision::gcd(num, v);
  }
  for (Eigen::Index i = 0; i < n; ++i) alpha(i) = alpha(i) * Rational(den) / Rational(num);
  return alpha;
}

}  // namespace

NegDefCertificate certify_negative_definite(const FiniteMetric& m) {
  NegDefCertificate cert;
  cert.centered_form = centered(m.distances());
  auto ldl = factor_gram(cert.centered_form);
  cert.pivots = ldl.pivots();
  for (auto p : ldl.permutation()) cert.permutation.push_back(static_cast<int>(p));
  cert.negative_definite = ldl.is_psd();
  if (!cert.negative_definite) {
    RationalVector alpha = integral_zero_sum(*ldl.negative_direction());
    Rational value = form_value(m, alpha);
    if (value <= 0) throw ConsistencyError("negative-definiteness witness does not re-evaluate");
    cert.witness = std::move(alpha);
    cert.witness_value = std::move(value);
  }
  return cert;
}

namespace {

template <typename Acc, typename Dist>
void enumerate_hyper(std::size_t n, int bound, const Dist& dist, HypermetricReport& report,
                     Acc& best) {
  std::vector<int> t(n, 0);
  std::vector<std::vector<Acc>> partial(n + 1, std::vector<Acc>(n, Acc(0)));
  std::vector<Acc> value(n + 1, Acc(0));
  bool have_best = false;
  std::function<void(std::size_t, int)> go = [&](std::size_t k, int sum) {
    auto assign = [&](int tk) {
      t[k] = tk;
      value[k + 1] = value[k] + Acc(2 * tk) * partial[k][k];
      for (std::size_t j = k + 1; j < n; ++j)
        partial[k + 1][j] = partial[k][j] + Acc(tk) * dist(k, j);
    };
    if (k + 1 == n) {
      int last = 1 - sum;
      if (last < -bound || last > bound) return;
      assign(last);
      ++report.checked;
      if (!have_best || value[n] > best) {
        best = value[n];
        report.worst = t;
        have_best = true;
      }
      return;
    }
    for (int tk = -bound; tk <= bound; ++tk) {
      assign(tk);
      go(k + 1, sum + tk);
    }
  };
  go(0, 0);
}

}  // namespace

HypermetricReport certify_hypermetric(const FiniteMetric& m, int bound, std::uint64_t budget) {
  if (bound < 1) throw InputError("hypermetric bound must be at least 1");
  const std::size_t n = m.size();
  long double candidates = 1;
  for (std::size_t i = 1; i < n; ++i) candidates *= 2.0L * bound + 1;
  if (candidates > static_cast<long double>(budget))
    throw ResourceError("hypermetric enumeration at bound " + std::to_string(bound) + " over " +
                        std::to_string(n) + " points exceeds the budget of " +
                        std::to_string(budget) + " vectors");
  HypermetricReport report;
  report.bound = bound;
  if (const auto& scaled = m.scaled()) {
    const auto& d = scaled->values;
    __int128 best = 0;
    enumerate_hyper<__int128>(
        n, bound,
        [&](std::size_t i, std::size_t j) {
          return static_cast<__int128>(d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
        },
        report, best);
    Integer num = 0;
    bool negative = best < 0;
    unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-best)
                                     : static_cast<unsigned __int128>(best);
    Integer base = Integer(1) << 64;
    num = Integer(static_cast<std::uint64_t>(mag >> 64)) * base +
          Integer(static_cast<std::uint64_t>(mag));
    if (negative) num = -num;
    report.max_value = Rational(num) / Rational(scaled->scale);
  } else {
    Rational best = 0;
    enumerate_hyper<Rational>(
        n, bound, [&](std::size_t i, std::size_t j) { return m.dist(static_cast<int>(i), static_cast<int>(j)); },
        report, best);
    report.max_value = best;
  }
  report.pass = report.max_value <= 0;
  return report;
}

GnsEmbedding gns_embed(const FiniteMetric& m, double tol) {
  auto form = centered(m.distances());
  auto ldl = factor_gram(form);
  if (!ldl.is_psd()) {
    auto cert = certify_negative_definite(m);
    std::string w;
    for (Eigen::Index i = 0; i < cert.witness->size(); ++i)
      w += (i ? "," : "") + to_string((*cert.witness)(i));
    throw InputError("metric is not negative definite; zero-sum witness (" + w +
                     ") has form value " + to_string(cert.witness_value));
  }
  const Eigen::Index n = static_cast<Eigen::Index>(m.size());
  const Eigen::Index rank = ldl.rank();
  GnsEmbedding out;
  out.points = m.points();
  out.tolerance = tol;
  out.coordinates = Eigen::MatrixXd::Zero(n, rank);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto row = ldl.permutation()[static_cast<std::size_t>(k)];
    for (Eigen::Index c = 0; c < std::min(rank, k + 1); ++c)
      out.coordinates(row, c) = to_double(ldl.matrix_l()(k, c)) *
                                std::sqrt(to_double(ldl.pivots()[static_cast<std::size_t>(c)]));
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      double sq = (out.coordinates.row(i) - out.coordinates.row(j)).squaredNorm();
      double err = std::abs(sq - to_double(m.dist(static_cast<int>(i), static_cast<int>(j))));
      out.max_error = std::max(out.max_error, err);
    }
  if (!(out.max_error <= tol))
    throw ConsistencyError("GNS coordinates miss the metric by " + std::to_string(out.max_error));
  return out;
}

L1Embedding l1_embed(const MedianGraphCert& g) {
  L1Embedding out;
  out.points = g.labels();
  out.dimension = g.walls().size();
  out.coordinates = wall_coordinates(g, 0);
  const int n = static_cast<int>(g.size());
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (static_cast<int>((out.coordinates[x] ^ out.coordinates[y]).count()) != g.dist(x, y))
        throw ConsistencyError("wall coordinates do not reproduce the path metric at " +
                               g.labels()[x] + ", " + g.labels()[y]);
  return out;
}

PointSet geodesic_hull(const FiniteMetric& m, const PointSet& s) {
  PointSet hull = s;
  std::vector<int> work = members(s);
  std::vector<int> done;
  while (!work.empty()) {
    int u = work.back();
    work.pop_back();
    done.push_back(u);
    for (int v : done) {
      PointSet fresh = m.interval(u, v) - hull;
      if (fresh.none()) continue;
      hull |= fresh;
      for (int w : members(fresh)) work.push_back(w);
    }
  }
  return hull;
}

HellyReport check_helly(const FiniteMetric& m, std::size_t cap) {
  const std::size_t n = m.size();
  if (n > cap)
    throw ResourceError("Helly check capped at " + std::to_string(cap) + " points, got " +
                        std::to_string(n));
  if (n > 30) throw ResourceError("Helly check enumerates subsets and supports at most 30 points");
  std::vector<std::uint64_t> interval(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& s = m.interval(static_cast<int>(x), static_cast<int>(y));
      std::uint64_t bits = 0;
      for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i)) bits |= 1ULL << i;
      interval[x * n + y] = bits;
    }
  HellyReport report;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    bool convex = true;
    for (std::size_t x = 0; x < n && convex; ++x) {
      if (!(mask >> x & 1)) continue;
      for (std::size_t y = x + 1; y < n && convex; ++y)
        if ((mask >> y & 1) && (interval[x * n + y] & ~mask)) convex = false;
    }
    if (convex) ++report.convex_sets;
  }

  auto hull = [&](int a, int b) {
    PointSet s(n);
    s.set(static_cast<std::size_t>(a));
    s.set(static_cast<std::size_t>(b));
    return geodesic_hull(m, s);
  };
  for (int x = 0; x < static_cast<int>(n) && report.holds; ++x)
    for (int y = x + 1; y < static_cast<int>(n) && report.holds; ++y)
      for (int z = y + 1; z < static_cast<int>(n) && report.holds; ++z) {
        PointSet yz = hull(y, z), xz = hull(x, z), xy = hull(x, y);
        if ((yz & xz & xy).none()) {
          report.holds = false;
          report.witness_family = {yz, xz, xy};
          report.witness_points = std::array<int, 3>{x, y, z};
        }
      }
  report.modular = classify(m).kind != MetricClass::Neither;
  report.agrees_with_modularity = report.holds == report.modular;
  return report;
}

std::vector<RetractionStep> retraction_decomposition(const MedianMetric& m, std::size_t cap) {
  const std::size_t n = m.size();
  const auto& metric = m.metric();
  std::vector<RetractionStep> trace;
  PointSet domain = full_set(n);
  while (domain.count() > 1) {
    const std::vector<int> index = members(domain);
    const auto k = static_cast<Eigen::Index>(index.size());
    Labels labels;
    RationalMatrix sub(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      labels.push_back(metric.points()[static_cast<std::size_t>(index[i])]);
      for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = m.dist(index[i], index[j]);
    }
    std::optional<MedianMetric> local;
    try {
      local = MedianMetric::certify(FiniteMetric(std::move(labels), std::move(sub)));
    } catch (const InputError& e) {
      throw ConsistencyError(std::string("retraction domain is not median: ") + e.what());
    }
    auto halfspaces = enumerate_halfspaces(local->algebra(), cap);

    PointSet best;
    std::size_t best_size = 0;
    for (const auto& h : halfspaces)
      for (const PointSet& side : {h.side, h.complement()}) {
        std::size_t c = side.count();
        if (c == 0 || c == index.size() || c <= best_size) continue;
        best_size = c;
        best = side;
      }
    if (best_size == 0) throw ConsistencyError("domain with two points has no proper halfspace");

    RetractionStep step;
    step.domain = domain;
    step.halfspace = PointSet(n);
    for (auto i = best.find_first(); i != PointSet::npos; i = best.find_next(i))
      step.halfspace.set(static_cast<std::size_t>(index[i]));
    const PointSet& h = step.halfspace;
    const std::vector<int> inside = members(h);
    const std::vector<int> outside = members(domain - h);
    step.retraction.assign(n, -1);
    for (int x : inside) step.retraction[static_cast<std::size_t>(x)] = x;

    std::optional<Rational> delta;
    for (int x : outside) {
      int nearest = -1;
      int ties = 0;
      for (int p : inside) {
        if (nearest < 0 || m.dist(x, p) < m.dist(x, nearest)) {
          nearest = p;
          ties = 1;
        } else if (m.dist(x, p) == m.dist(x, nearest)) {
          ++ties;
        }
      }
      if (ties != 1)
        throw ConsistencyError("nearest point of " + metric.points()[x] + " is not unique");
      for (int p : inside)
        if (!metric.interval(x, p).test(static_cast<std::size_t>(nearest)))
          throw ConsistencyError("nearest point of " + metric.points()[x] + " is off the interval to " +
                                 metric.points()[p]);
      int separating = 0;
      for (const auto& w : halfspaces) {
        const std::size_t lx = static_cast<std::size_t>(
            std::find(index.begin(), index.end(), x) - index.begin());
        const std::size_t lp = static_cast<std::size_t>(
            std::find(index.begin(), index.end(), nearest) - index.begin());
        if (w.side.test(lx) != w.side.test(lp)) ++separating;
      }
      if (separating != 1)
        throw ConsistencyError("more than one wall separates " + metric.points()[x] +
                               " from its nearest point");
      step.retraction[static_cast<std::size_t>(x)] = nearest;
      if (!delta) delta = m.dist(x, nearest);
      else if (*delta != m.dist(x, nearest))
        throw ConsistencyError("distance to the halfspace is not constant");
    }
    step.delta = *delta;

    auto p = [&](int x) { return step.retraction[static_cast<std::size_t>(x)]; };
    for (int x : outside)
      for (int y : outside) {
        if (x == y) continue;
        const auto& xz = metric.interval(x, p(y));
        const auto& yt = metric.interval(y, p(x));
        if (!xz.test(static_cast<std::size_t>(y)) || !xz.test(static_cast<std::size_t>(p(x))) ||
            !yt.test(static_cast<std::size_t>(x)) || !yt.test(static_cast<std::size_t>(p(y))))
          throw ConsistencyError("points " + metric.points()[x] + ", " + metric.points()[y] +
                                 " and their retractions do not form a rectangle");
      }
    for (int x : members(domain))
      for (int y : members(domain)) {
        Rational expect = m.dist(p(x), p(y));
        if (h.test(static_cast<std::size_t>(x)) != h.test(static_cast<std::size_t>(y)))
          expect += step.delta;
        if (m.dist(x, y) != expect)
          throw ConsistencyError("retraction distance law fails at " + metric.points()[x] + ", " +
                                 metric.points()[y]);
      }
    domain = h;
    trace.push_back(std::move(step));
  }
  return trace;
}

TraceForm form_via_trace(const std::vector<RetractionStep>& trace, const RationalVector& alpha) {
  TraceForm out;
  out.value = 0;
  std::vector<Rational> weight(alpha.data(), alpha.data() + alpha.size());
  for (const auto& step : trace) {
    if (step.retraction.size() != weight.size())
      throw InputError("coefficient vector does not match the trace");
    Rational in = 0, off = 0;
    for (auto x = step.domain.find_first(); x != PointSet::npos; x = step.domain.find_next(x))
      (step.halfspace.test(x) ? in : off) += weight[x];
    Rational c = 2 * step.delta * off * in;
    for (auto x = step.domain.find_first(); x != PointSet::npos; x = step.domain.find_next(x)) {
      if (step.halfspace.test(x)) continue;
      weight[static_cast<std::size_t>(step.retraction[x])] += weight[x];
      weight[x] = 0;
    }
    out.value += c;
    out.contributions.push_back(std::move(c));
  }
  return out;
}

}  // namespace medgeo
