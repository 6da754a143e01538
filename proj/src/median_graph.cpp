#include "medgeo/median_graph.hpp"

#include "medgeo/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace medgeo {

SimpleGraph::SimpleGraph(Labels vertices, std::vector<Edge> edges)
    : labels_(std::move(vertices)), adjacency_(labels_.size()) {
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw InputError("duplicate vertex '" + l + "'");
  const int n = static_cast<int>(labels_.size());
  std::set<Edge> unique;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("loop at vertex '" + labels_[u] + "'");
    if (u > v) std::swap(u, v);
    if (!unique.insert({u, v}).second)
      throw InputError("repeated edge (" + labels_[u] + "," + labels_[v] + ")");
  }
  edges_.assign(unique.begin(), unique.end());
  for (auto [u, v] : edges_) {
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

bool SimpleGraph::adjacent(int u, int v) const {
  const auto& a = neighbors(u);
  return std::binary_search(a.begin(), a.end(), v);
}

Matrix<int> SimpleGraph::distances() const {
  const int n = static_cast<int>(size());
  Matrix<int> d = Matrix<int>::Constant(n, n, -1);
  std::vector<int> queue(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    d(s, s) = 0;
    while (head < tail) {
      int u = queue[head++];
      for (int v : neighbors(u))
        if (d(s, v) < 0) {
          d(s, v) = d(s, u) + 1;
          queue[tail++] = v;
        }
    }
  }
  return d;
}

bool SimpleGraph::connected() const {
  if (size() == 0) return false;
  auto d = distances();
  return (d.row(0).array() >= 0).all();
}

FiniteMetric SimpleGraph::path_metric() const {
  auto d = distances();
  if ((d.array() < 0).any()) throw InputError("graph is disconnected");
  return FiniteMetric(labels_, d.cast<Rational>());
}

CoordinateIndex::CoordinateIndex(std::vector<PointSet> coords, std::size_t walls)
    : walls_(walls), coords_(std::move(coords)) {
  if (walls_ <= 64) {
    packed_.reserve(coords_.size());
    for (const auto& c : coords_) {
      std::uint64_t code = 0;
      for (auto b = c.find_first(); b != PointSet::npos; b = c.find_next(b)) code |= 1ull << b;
      packed_.push_back(code);
    }
    if (walls_ <= 22) {
      dense_.assign(std::size_t{1} << walls_, -1);
      for (std::size_t v = 0; v < packed_.size(); ++v) dense_[packed_[v]] = static_cast<int>(v);
    } else {
      for (std::size_t v = 0; v < packed_.size(); ++v)
        sparse_.emplace(packed_[v], static_cast<int>(v));
    }
  } else {
    for (std::size_t v = 0; v < coords_.size(); ++v) wide_.emplace(coords_[v], static_cast<int>(v));
  }
}

int CoordinateIndex::find(const PointSet& c) const {
  if (walls_ > 64) {
    auto it = wide_.find(c);
    return it == wide_.end() ? -1 : it->second;
  }
  std::uint64_t code = 0;
  for (auto b = c.find_first(); b != PointSet::npos; b = c.find_next(b)) code |= 1ull << b;
  if (!dense_.empty()) return dense_[code];
  auto it = sparse_.find(code);
  return it == sparse_.end() ? -1 : it->second;
}

int CoordinateIndex::majority(int x, int y, int z) const {
  if (walls_ > 64) {
    const auto &a = coordinates(x), &b = coordinates(y), &c = coordinates(z);
    return find((a & b) | (b & c) | (c & a));
  }
  std::uint64_t a = packed_[static_cast<std::size_t>(x)], b = packed_[static_cast<std::size_t>(y)],
                c = packed_[static_cast<std::size_t>(z)];
  std::uint64_t m = (a & b) | (b & c) | (c & a);
  if (!dense_.empty()) return dense_[m];
  auto it = sparse_.find(m);
  return it == sparse_.end() ? -1 : it->second;
}

bool CoordinateIndex::between(int x, int t, int y) const {
  if (walls_ > 64) {
    const auto &a = coordinates(x), &b = coordinates(y), &c = coordinates(t);
    return ((a & b) - c).none() && (c - (a | b)).none();
  }
  std::uint64_t a = packed_[static_cast<std::size_t>(x)], b = packed_[static_cast<std::size_t>(y)],
                c = packed_[static_cast<std::size_t>(t)];
  return (a & b & ~c) == 0 && (c & ~(a | b)) == 0;
}

namespace {

PointSet halfspace_of(const Matrix<int>& d, int x, int y) {
  PointSet h(static_cast<std::size_t>(d.rows()));
  for (Eigen::Index z = 0; z < d.rows(); ++z)
    if (d(z, x) < d(z, y)) h.set(static_cast<std::size_t>(z));
  return h;
}

bool bipartite(const SimpleGraph& g, const Matrix<int>& d) {
  for (auto [u, v] : g.edges())
    if ((d(0, u) + d(0, v)) % 2 == 0) return false;
  return true;
}

std::vector<PointSet> coordinates_of(const std::vector<Halfspace>& walls, std::size_t n) {
  std::vector<PointSet> coords(n, PointSet(walls.size()));
  for (std::size_t i = 0; i < walls.size(); ++i)
    for (std::size_t v = 0; v < n; ++v)
      if (!walls[i].side.test(v)) coords[v].set(i);
  return coords;
}

NotMedianGraph witness_from_metric(const SimpleGraph& g) {
  auto c = classify(g.path_metric());
  if (c.kind == MetricClass::Median)
    throw ConsistencyError("graph rejected by wall coordinates but its path metric is median");
  return NotMedianGraph{c.kind, *c.witness, c.intersection};
}

}  // namespace

MedianGraphCert::MedianGraphCert(SimpleGraph g, Matrix<int> d, std::vector<Halfspace> walls,
                                 std::vector<int> edge_wall)
    : graph_(std::move(g)),
      distances_(std::move(d)),
      walls_(std::move(walls)),
      edge_wall_(std::move(edge_wall)),
      index_(coordinates_of(walls_, graph_.size()), walls_.size()) {}

int MedianGraphCert::median(int x, int y, int z) const { return index_.majority(x, y, z); }

PointSet MedianGraphCert::interval(int x, int y) const {
  PointSet s(size());
  for (int t = 0; t < static_cast<int>(size()); ++t)
    if (in_interval(t, x, y)) s.set(static_cast<std::size_t>(t));
  return s;
}

MedianMetric MedianGraphCert::median_metric() const {
  return MedianMetric::certify(graph_.path_metric());
}

GraphCertification certify_median_graph(const SimpleGraph& g) {
  if (!g.connected()) throw InputError("graph is disconnected");
  auto d = g.distances();
  if (!bipartite(g, d)) return witness_from_metric(g);

  std::vector<Halfspace> walls;
  std::vector<int> edge_wall;
  std::map<PointSet, int> index;
  for (auto [u, v] : g.edges()) {
    PointSet h = halfspace_of(d, u, v);
    if (!h.test(0)) h.flip();
    auto [it, fresh] = index.emplace(h, static_cast<int>(index.size()));
    if (fresh) walls.push_back(Halfspace{h});
    edge_wall.push_back(it->second);
  }
  std::vector<int> order(walls.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lex_less(walls[a].side, walls[b].side); });
  std::vector<int> rank(walls.size());
  std::vector<Halfspace> sorted;
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    sorted.push_back(walls[static_cast<std::size_t>(order[i])]);
  }
  for (int& w : edge_wall) w = rank[static_cast<std::size_t>(w)];

  MedianGraphCert cert(g, std::move(d), std::move(sorted), std::move(edge_wall));
  const int n = static_cast<int>(g.size());
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (separating_walls(cert, x, y) != cert.dist(x, y)) return witness_from_metric(g);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z)
        if (cert.median(x, y, z) < 0) return witness_from_metric(g);
  return cert;
}

MedianGraphCert require_median_graph(const SimpleGraph& g) {
  auto result = certify_median_graph(g);
  if (auto* bad = std::get_if<NotMedianGraph>(&result)) {
    const auto& w = bad->witness;
    throw InputError("graph is not median: " + to_string(bad->kind) + " at (" + g.labels()[w[0]] +
                     ", " + g.labels()[w[1]] + ", " + g.labels()[w[2]] + ")");
  }
  return std::get<MedianGraphCert>(std::move(result));
}

const std::vector<Halfspace>& edge_halfspaces(const MedianGraphCert& g) { return g.walls(); }

PointSet edge_halfspace(const MedianGraphCert& g, int x, int y) {
  if (!g.graph().adjacent(x, y)) throw InputError("edge halfspace needs adjacent vertices");
  return halfspace_of(g.distances(), x, y);
}

int separating_walls(const MedianGraphCert& g, int x, int y) {
  int count = 0;
  for (const auto& w : g.walls())
    if (w.side.test(static_cast<std::size_t>(x)) != w.side.test(static_cast<std::size_t>(y)))
      ++count;
  return count;
}

std::vector<PointSet> wall_coordinates(const MedianGraphCert& g, int base) {
  const std::size_t n = g.size();
  const PointSet& origin = g.coordinates().coordinates(base);
  std::vector<PointSet> coords;
  coords.reserve(n);
  for (std::size_t v = 0; v < n; ++v)
    coords.push_back(g.coordinates().coordinates(static_cast<int>(v)) ^ origin);
  return coords;
}

bool walls_cross(const Halfspace& a, const Halfspace& b) {
  PointSet ac = a.complement(), bc = b.complement();
  return a.side.intersects(b.side) && a.side.intersects(bc) && ac.intersects(b.side) &&
         ac.intersects(bc);
}

int max_crossing_family(const MedianGraphCert& g) {
  const std::size_t w = g.walls().size();
  if (w == 0) return 0;
  std::vector<PointSet> cross(w, PointSet(w));
  for (std::size_t i = 0; i < w; ++i)
    for (std::size_t j = i + 1; j < w; ++j)
      if (walls_cross(g.walls()[i], g.walls()[j])) {
        cross[i].set(j);
        cross[j].set(i);
      }
  std::size_t best = 0;
  // Bron-Kerbosch with pivoting.
  std::function<void(std::size_t, PointSet, PointSet)> expand = [&](std::size_t size, PointSet p,
                                                                   PointSet x) {
    if (p.none() && x.none()) {
      best = std::max(best, size);
      return;
    }
    if (size + p.count() <= best) return;
    auto pivot = (p | x).find_first();
    PointSet candidates = p - cross[pivot];
    for (auto v = candidates.find_first(); v != PointSet::npos; v = candidates.find_next(v)) {
      expand(size + 1, p & cross[v], x & cross[v]);
      p.reset(v);
      x.set(v);
    }
  };
  PointSet all(w);
  all.set();
  expand(0, all, PointSet(w));
  return static_cast<int>(best);
}

CubeComplex fill_cubes(const MedianGraphCert& g, std::optional<int> max_dim) {
  if (max_dim && *max_dim < 1) throw InputError("fill_cubes: max_dim must be >= 1");
  CubeComplex out;
  out.max_dim = max_dim ? *max_dim : max_crossing_family(g);
  if (out.max_dim < 1) return out;

  const auto& index = g.coordinates();
  const std::size_t w = g.walls().size();

  // A cube is (anchor, walls): anchor has every bit in `walls` cleared, and
  // the vertices are anchor ^ T for T a subset of walls.
  struct Cube {
    PointSet anchor;
    std::vector<int> walls;
  };
  auto vertices_of = [&](const Cube& c, std::vector<int>* out_vertices) {
    const std::size_t k = c.walls.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      PointSet p = c.anchor;
      for (std::size_t b = 0; b < k; ++b)
        if (mask >> b & 1) p.set(static_cast<std::size_t>(c.walls[b]));
      int v = index.find(p);
      if (v < 0) return false;
      if (out_vertices) out_vertices->push_back(v);
    }
    return true;
  };
  auto record = [&](int dim, const Cube& c) {
    std::vector<int> vs;
    vertices_of(c, &vs);
    std::sort(vs.begin(), vs.end());
    out.cubes[dim].push_back(std::move(vs));
  };

  std::vector<Cube> layer;
  for (std::size_t e = 0; e < g.graph().edges().size(); ++e) {
    int wall = g.edge_wall()[e];
    PointSet anchor = index.coordinates(g.graph().edges()[e].first);
    anchor.reset(static_cast<std::size_t>(wall));
    layer.push_back(Cube{anchor, {wall}});
  }
  for (const auto& c : layer) record(1, c);

  for (int dim = 2; dim <= out.max_dim && !layer.empty(); ++dim) {
    std::vector<Cube> next;
    for (const auto& c : layer) {
      for (std::size_t extra = static_cast<std::size_t>(c.walls.back()) + 1; extra < w; ++extra) {
        if (c.anchor.test(extra)) continue;
        Cube grown = c;
        grown.walls.push_back(static_cast<int>(extra));
        if (vertices_of(grown, nullptr)) next.push_back(std::move(grown));
      }
    }
    for (const auto& c : next) record(dim, c);
    layer = std::move(next);
  }
  for (auto& [dim, list] : out.cubes) std::sort(list.begin(), list.end());
  return out;
}

}  // namespace medgeo
