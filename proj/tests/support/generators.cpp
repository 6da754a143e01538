#include "generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gen {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

medgeo::Labels numbered(const char* prefix, int n) {
  medgeo::Labels out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

medgeo::FiniteMetric weighted_tree_metric(int n, Rng& rng) {
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<medgeo::Rational> weight(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) {
    parent[static_cast<std::size_t>(i)] = uniform(rng, 0, i - 1);
    weight[static_cast<std::size_t>(i)] = medgeo::Rational(uniform(rng, 1, 9), uniform(rng, 1, 4));
  }
  medgeo::RationalMatrix d = medgeo::RationalMatrix::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    const int p = parent[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) {
      d(i, j) = d(p, j) + weight[static_cast<std::size_t>(i)];
      d(j, i) = d(i, j);
    }
    d(i, p) = d(p, i) = weight[static_cast<std::size_t>(i)];
  }
  return medgeo::FiniteMetric(numbered("t", n), d);
}

medgeo::SimpleGraph random_connected_graph(int n, int extra, Rng& rng) {
  std::vector<medgeo::Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(uniform(rng, 0, i - 1), i);
  for (int k = 0; k < extra && n > 2; ++k) {
    int u = uniform(rng, 0, n - 1), v = uniform(rng, 0, n - 1);
    if (u == v) continue;
    medgeo::Edge e{std::min(u, v), std::max(u, v)};
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  }
  return medgeo::SimpleGraph(numbered("g", n), edges);
}

medgeo::FiniteMetric random_metric(int n, Rng& rng) {
  medgeo::RationalMatrix d = medgeo::RationalMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d(i, j) = d(j, i) = medgeo::Rational(uniform(rng, 1, 6));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d(i, k) + d(k, j) < d(i, j)) d(i, j) = d(i, k) + d(k, j);
  return medgeo::FiniteMetric(numbered("m", n), d);
}

std::vector<int> permutation(int n, Rng& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::vector<Eigen::VectorXd> euclidean_points(int count, int dim, double scale, Rng& rng) {
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<Eigen::VectorXd> out;
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXd p(dim);
    for (int k = 0; k < dim; ++k) p(k) = u(rng);
    out.push_back(p);
  }
  return out;
}

medgeo::RationalVector zero_sum_vector(int n, int range, Rng& rng) {
  for (;;) {
    medgeo::RationalVector v(n);
    int sum = 0;
    bool nonzero = false;
    for (int i = 0; i + 1 < n; ++i) {
      int x = uniform(rng, -range, range);
      v(i) = x;
      sum += x;
      nonzero = nonzero || x != 0;
    }
    v(n - 1) = -sum;
    if (nonzero) return v;
  }
}

void for_seeds(std::uint64_t base, int count, const std::function<void(std::uint64_t, Rng&)>& body) {
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = base + static_cast<std::uint64_t>(i);
    Rng rng(seed);
    body(seed, rng);
  }
}

}  // namespace gen
