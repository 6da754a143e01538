#include "medgeo/finite_metric.hpp"

#include "medgeo/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace medgeo {

namespace {

// Calls f with the scaled int64 matrix when available, else the rationals.
template <typename F>
decltype(auto) with_distances(const FiniteMetric& m, F&& f) {
  if (m.scaled()) return f(m.scaled()->values);
  return f(m.distances());
}

template <typename D>
bool between(const D& d, int x, int t, int y) {
  return d(x, t) + d(t, y) == d(x, y);
}

}  // namespace

FiniteMetric::FiniteMetric(Labels points, RationalMatrix dist)
    : points_(std::move(points)), dist_(std::move(dist)) {
  const auto n = static_cast<Eigen::Index>(points_.size());
  if (n == 0) throw InputError("metric has no points");
  if (dist_.rows() != n || dist_.cols() != n)
    throw InputError("distance matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  std::set<std::string> seen;
  for (const auto& p : points_)
    if (!seen.insert(p).second) throw InputError("duplicate point '" + p + "'");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (dist_(i, i) != 0) throw InputError("d(" + points_[i] + "," + points_[i] + ") != 0");
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (dist_(i, j) != dist_(j, i))
        throw InputError("asymmetric distance at (" + points_[i] + "," + points_[j] + ")");
      if (dist_(i, j) <= 0)
        throw InputError("distinct points at distance <= 0: (" + points_[i] + "," + points_[j] +
                         ")");
    }
  }
  scaled_ = scale_to_int64(dist_, 56);
  const int size = static_cast<int>(n);
  with_distances(*this, [&](const auto& d) {
    for (int x = 0; x < size; ++x)
      for (int y = x + 1; y < size; ++y)
        for (int z = 0; z < size; ++z)
          if (d(x, y) > d(x, z) + d(z, y))
            throw InputError("triangle inequality fails: d(" + points_[x] + "," + points_[y] +
                             ") > d(" + points_[x] + "," + points_[z] + ") + d(" + points_[z] +
                             "," + points_[y] + ")");
  });
  intervals_.assign(static_cast<std::size_t>(size) * size, PointSet(points_.size()));
  with_distances(*this, [&](const auto& d) {
    for (int x = 0; x < size; ++x)
      for (int y = x; y < size; ++y) {
        PointSet s(points_.size());
        for (int t = 0; t < size; ++t)
          if (between(d, x, t, y)) s.set(static_cast<std::size_t>(t));
        intervals_[static_cast<std::size_t>(x) * size + y] = s;
        intervals_[static_cast<std::size_t>(y) * size + x] = s;
      }
  });
}

IntervalStructure FiniteMetric::interval_structure() const {
  return IntervalStructure{points_, intervals_};
}

PointSet geodesic_interval(const FiniteMetric& m, int x, int y) {
  PointSet s(m.size());
  for (int t = 0; t < static_cast<int>(m.size()); ++t)
    if (m.dist(x, t) + m.dist(t, y) == m.dist(x, y)) s.set(static_cast<std::size_t>(t));
  return s;
}

std::string to_string(MetricClass c) {
  switch (c) {
    case MetricClass::Median: return "median";
    case MetricClass::ModularNotMedian: return "modular";
    case MetricClass::Neither: return "neither";
  }
  return "?";
}

Classification classify(const FiniteMetric& m) {
  const int n = static_cast<int>(m.size());
  Classification out;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        int c = common_point(m.interval(x, y), m.interval(y, z), m.interval(z, x));
        if (c >= 0) continue;
        if (c == -1) {
          out.kind = MetricClass::Neither;
          out.witness = std::array{x, y, z};
          out.intersection = PointSet(m.size());
          return out;
        }
        if (out.kind == MetricClass::Median) {
          out.kind = MetricClass::ModularNotMedian;
          out.witness = std::array{x, y, z};
          out.intersection = m.interval(x, y) & m.interval(y, z) & m.interval(z, x);
        }
      }
  return out;
}

MedianMetric MedianMetric::certify(FiniteMetric m) {
  auto c = classify(m);
  if (c.kind != MetricClass::Median) {
    const auto& w = *c.witness;
    const auto& p = m.points();
    throw InputError("metric is not median (" + to_string(c.kind) + "): triple (" + p[w[0]] + "," +
                     p[w[1]] + "," + p[w[2]] + ") has common points " +
                     format_set(c.intersection, p));
  }
  const int n = static_cast<int>(m.size());
  MedianTable table(m.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        table.set(x, y, z, common_point(m.interval(x, y), m.interval(y, z), m.interval(z, x)));
  MedianMetric out(std::move(m), std::move(table));
  auto legs = check_leg_formula(out);
  if (!legs.pass) throw ConsistencyError("leg formula fails at a memoized median: " + legs.detail);
  return out;
}

FiniteMedianAlgebra MedianMetric::algebra() const {
  return FiniteMedianAlgebra::from(metric_.interval_structure());
}

int median_point(const MedianMetric& m, int x, int y, int z) { return m.median(x, y, z); }

Rational leg_length(const FiniteMetric& m, int x, int y, int z) {
  return (m.dist(x, y) + m.dist(x, z) - m.dist(y, z)) / 2;
}

PropertyReport check_leg_formula(const MedianMetric& mm) {
  PropertyReport r{"leg formula"};
  const int n = static_cast<int>(mm.size());
  with_distances(mm.metric(), [&](const auto& d) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          int m = mm.median(x, y, z);
          ++r.checked;
          if (2 * d(x, m) != d(x, y) + d(x, z) - d(y, z)) {
            r.pass = false;
            r.witness = {x, y, z, m};
            r.detail = "2 d(x,m) != d(x,y) + d(x,z) - d(y,z)";
            return;
          }
        }
  });
  return r;
}

PropertyReport check_colinear_lemma(const MedianMetric& mm) {
  PropertyReport r{"median lies on [x,v] for v in [y,z]"};
  const int n = static_cast<int>(mm.size());
  const auto& metric = mm.metric();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = y; z < n; ++z) {
        auto m = static_cast<std::size_t>(mm.median(x, y, z));
        const auto& yz = metric.interval(y, z);
        for (auto v = yz.find_first(); v != PointSet::npos; v = yz.find_next(v)) {
          ++r.checked;
          if (!metric.interval(x, static_cast<int>(v)).test(m)) {
            r.pass = false;
            r.witness = {x, y, z, static_cast<int>(v)};
            r.detail = "median(x,y,z) not in [x,v]";
            return r;
          }
        }
      }
  return r;
}

LipschitzReport check_median_lipschitz(const MedianMetric& mm, const LipschitzOptions& opts) {
  LipschitzReport out{{"near-median inequality"}, {"median continuity inequality"}};
  const int n = static_cast<int>(mm.size());
  with_distances(mm.metric(), [&](const auto& d) {
    auto& r = out.near_median;
    for (int x = 0; x < n && r.pass; ++x)
      for (int y = 0; y < n && r.pass; ++y)
        for (int z = 0; z < n && r.pass; ++z) {
          int m = mm.median(x, y, z);
          auto legs = d(m, x) + d(m, y) + d(m, z);
          for (int v = 0; v < n; ++v) {
            ++r.checked;
            if (d(v, m) > d(v, x) + d(v, y) + d(v, z) - legs) {
              r.pass = false;
              r.witness = {x, y, z, v};
              r.detail = "d(v,m) exceeds the leg-sum deficit";
              break;
            }
          }
        }
  });
  with_distances(mm.metric(), [&](const auto& d) {
    auto& r = out.continuity;
    auto check = [&](int x, int y, int z, int x2, int y2, int z2) {
      ++r.checked;
      int m = mm.median(x, y, z);
      int m2 = mm.median(x2, y2, z2);
      if (d(m, m2) > d(x, x2) + d(y, y2) + d(z, z2)) {
        r.pass = false;
        r.witness = {x, y, z, x2, y2, z2};
        r.detail = "d(m,m') exceeds d(x,x') + d(y,y') + d(z,z')";
      }
    };
    if (mm.size() <= opts.exhaustive_limit) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            for (int x2 = 0; x2 < n; ++x2)
              for (int y2 = 0; y2 < n; ++y2)
                for (int z2 = 0; z2 < n && r.pass; ++z2) check(x, y, z, x2, y2, z2);
      return;
    }
    r.exhaustive = false;
    r.seed = opts.seed;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (std::uint64_t s = 0; s < opts.samples && r.pass; ++s) {
      int t[6];
      for (int& v : t) v = pick(rng);
      check(t[0], t[1], t[2], t[3], t[4], t[5]);
    }
  });
  return out;
}

std::vector<Rectangle> find_rectangles(const MedianMetric& mm) {
  const auto& m = mm.metric();
  const int n = static_cast<int>(m.size());
  std::vector<Rectangle> out;
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      const auto& xz = m.interval(x, z);
      for (auto y = xz.find_first(); y != PointSet::npos; y = xz.find_next(y))
        for (auto t = xz.find_first(); t != PointSet::npos; t = xz.find_next(t)) {
          const auto& yt = m.interval(static_cast<int>(y), static_cast<int>(t));
          if (!yt.test(static_cast<std::size_t>(x)) || !yt.test(static_cast<std::size_t>(z)))
            continue;
          Rectangle r{x, static_cast<int>(y), z, static_cast<int>(t)};
          if (m.dist(r[0], r[1]) != m.dist(r[2], r[3]) || m.dist(r[1], r[2]) != m.dist(r[3], r[0]))
            throw ConsistencyError("rectangle with unequal opposite sides");
          out.push_back(r);
        }
    }
  return out;
}

FiniteMetric product_metric(const FiniteMetric& m1, const FiniteMetric& m2) {
  const auto n1 = static_cast<Eigen::Index>(m1.size());
  const auto n2 = static_cast<Eigen::Index>(m2.size());
  Labels labels;
  for (const auto& a : m1.points())
    for (const auto& b : m2.points()) labels.push_back("(" + a + "," + b + ")");
  RationalMatrix d(n1 * n2, n1 * n2);
  for (Eigen::Index i = 0; i < n1; ++i)
    for (Eigen::Index j = 0; j < n2; ++j)
      for (Eigen::Index k = 0; k < n1; ++k)
        for (Eigen::Index l = 0; l < n2; ++l)
          d(i * n2 + j, k * n2 + l) = m1.distances()(i, k) + m2.distances()(j, l);
  return FiniteMetric(std::move(labels), std::move(d));
}

MedianMetric product(const MedianMetric& m1, const MedianMetric& m2) {
  return MedianMetric::certify(product_metric(m1.metric(), m2.metric()));
}

FiniteMetric l1_metric(const std::vector<RationalVector>& points, Labels labels) {
  const auto n = static_cast<Eigen::Index>(points.size());
  if (labels.empty())
    for (Eigen::Index i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  RationalMatrix d = RationalMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (points[i].size() != points[j].size()) throw InputError("l1 points differ in dimension");
      Rational s = 0;
      for (Eigen::Index k = 0; k < points[i].size(); ++k) s += abs(points[i](k) - points[j](k));
      d(i, j) = s;
    }
  return FiniteMetric(std::move(labels), std::move(d));
}

RationalVector coordinatewise_median(const RationalVector& f, const RationalVector& g,
                                     const RationalVector& h) {
  RationalVector m(f.size());
  for (Eigen::Index k = 0; k < f.size(); ++k) {
    Rational a = std::max(f(k), g(k)), b = std::max(g(k), h(k)), c = std::max(h(k), f(k));
    m(k) = std::min({a, b, c});
  }
  return m;
}

}  // namespace medgeo
