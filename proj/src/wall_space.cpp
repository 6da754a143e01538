#include "medgeo/wall_space.hpp"

#include "medgeo/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace medgeo {

WallSpace::WallSpace(Labels points, std::vector<PointSet> sides) : points_(std::move(points)) {
  const std::size_t n = points_.size();
  if (n == 0) throw InputError("wall space has no points");
  std::set<std::string> seen;
  for (const auto& p : points_)
    if (!seen.insert(p).second) throw InputError("duplicate point '" + p + "'");
  std::set<PointSet> unique;
  for (auto side : sides) {
    if (side.size() != n) throw InputError("wall side over the wrong ground set");
    if (!side.test(0)) side.flip();
    if (!unique.insert(side).second)
      throw InputError("duplicate wall " + format_set(side, points_));
    walls_.push_back(Halfspace{std::move(side)});
  }
  const PointSet everything = full_set(n);
  if (!unique.count(everything)) {
    walls_.push_back(Halfspace{everything});
    trivial_added_ = true;
  }
  std::sort(walls_.begin(), walls_.end(),
            [](const Halfspace& a, const Halfspace& b) { return lex_less(a.side, b.side); });
  for (std::size_t i = 0; i < walls_.size(); ++i)
    if (walls_[i].side == everything) trivial_ = i;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      bool separated = std::any_of(walls_.begin(), walls_.end(), [&](const Halfspace& w) {
        return w.side.test(x) != w.side.test(y);
      });
      if (!separated)
        throw InputError("no wall separates " + points_[x] + " and " + points_[y]);
    }
}

int WallSpace::find_wall(const PointSet& side) const {
  for (std::size_t i = 0; i < walls_.size(); ++i)
    if (walls_[i].side == side || walls_[i].complement() == side) return static_cast<int>(i);
  return -1;
}

PointSet principal_halfspaces(const WallSpace& w, int x) {
  PointSet s(2 * w.walls().size());
  for (std::size_t i = 0; i < w.walls().size(); ++i)
    s.set(w.walls()[i].side.test(static_cast<std::size_t>(x)) ? 2 * i : 2 * i + 1);
  return s;
}

int wall_metric(const WallSpace& w, int x, int y) {
  int separating = 0;
  for (const auto& wall : w.walls())
    if (wall.side.test(static_cast<std::size_t>(x)) != wall.side.test(static_cast<std::size_t>(y)))
      ++separating;
  auto diff = (principal_halfspaces(w, x) ^ principal_halfspaces(w, y)).count();
  if (diff != 2 * static_cast<std::size_t>(separating))
    throw ConsistencyError("wall count and halfspace symmetric difference disagree");
  return separating;
}

bool is_wall_morphism(std::span<const int> f, const WallSpace& w1, const WallSpace& w2) {
  const std::size_t n = w1.size();
  if (f.size() != n) throw InputError("map must be total on the source points");
  for (int v : f)
    if (v < 0 || static_cast<std::size_t>(v) >= w2.size())
      throw InputError("map sends a point outside the target");
  for (const auto& wall : w2.walls()) {
    PointSet pre(n);
    for (std::size_t x = 0; x < n; ++x)
      if (wall.side.test(static_cast<std::size_t>(f[x]))) pre.set(x);
    if (pre.none() || pre.all()) continue;
    if (w1.find_wall(pre) < 0) return false;
  }
  return true;
}

Orientation principal_orientation(const WallSpace& w, int x) {
  Orientation o(w.walls().size());
  for (std::size_t i = 0; i < w.walls().size(); ++i)
    if (!w.walls()[i].side.test(static_cast<std::size_t>(x))) o.set(i);
  return o;
}

PointSet chosen_side(const WallSpace& w, const Orientation& o, std::size_t wall) {
  return o.test(wall) ? w.walls()[wall].complement() : w.walls()[wall].side;
}

bool is_consistent(const WallSpace& w, const Orientation& o) {
  std::vector<PointSet> chosen;
  for (std::size_t i = 0; i < w.walls().size(); ++i) chosen.push_back(chosen_side(w, o, i));
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (chosen[i].none()) return false;
    for (std::size_t j = i + 1; j < chosen.size(); ++j)
      if (!chosen[i].intersects(chosen[j])) return false;
  }
  return true;
}

bool is_upward_closed(const WallSpace& w, const Orientation& o) {
  const auto& walls = w.walls();
  for (std::size_t i = 0; i < walls.size(); ++i) {
    PointSet a = chosen_side(w, o, i);
    for (std::size_t j = 0; j < walls.size(); ++j) {
      if (j == i) continue;
      PointSet b = walls[j].side;
      for (int flip = 0; flip < 2; ++flip, b = walls[j].complement()) {
        bool b_chosen = (flip == 1) == o.test(j);
        if (a.is_subset_of(b) && !b_chosen) return false;
      }
    }
  }
  return true;
}

WallSpace wall_space_of(const MedianGraphCert& g) {
  std::vector<PointSet> sides;
  for (const auto& w : g.walls()) sides.push_back(w.side);
  return WallSpace(g.labels(), std::move(sides));
}

namespace {

std::string vertex_name(const WallSpace& w, const Orientation& o) {
  std::string name = "v";
  for (std::size_t i = 0; i < w.walls().size(); ++i)
    if (i != w.trivial_index()) name += o.test(i) ? '1' : '0';
  return name;
}

}  // namespace

CubulationResult cubulate(const WallSpace& w, std::size_t cap) {
  const auto& walls = w.walls();
  const std::size_t count = walls.size();
  if (count - 1 > cap)
    throw ResourceError("cubulation capped at " + std::to_string(cap) + " nontrivial walls, got " +
                        std::to_string(count - 1));
  std::vector<PointSet> sides[2];
  for (const auto& wall : walls) {
    sides[0].push_back(wall.side);
    sides[1].push_back(wall.complement());
  }

  // Flip-BFS from the principal orientations.
  std::set<Orientation> seen;
  std::deque<Orientation> frontier;
  for (int x = 0; x < static_cast<int>(w.size()); ++x) {
    auto o = principal_orientation(w, x);
    if (seen.insert(o).second) frontier.push_back(o);
  }
  while (!frontier.empty()) {
    Orientation o = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t i = 0; i < count; ++i) {
      if (i == w.trivial_index()) continue;
      const PointSet& flipped = sides[o.test(i) ? 0 : 1][i];
      bool ok = flipped.any();
      for (std::size_t j = 0; j < count && ok; ++j)
        if (j != i && !flipped.intersects(sides[o.test(j) ? 1 : 0][j])) ok = false;
      if (!ok) continue;
      Orientation next = o;
      next.flip(i);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }

  std::vector<std::pair<std::string, Orientation>> named;
  for (const auto& o : seen) named.emplace_back(vertex_name(w, o), o);
  std::sort(named.begin(), named.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Labels labels;
  std::vector<Orientation> orientations;
  std::map<Orientation, int> vertex_of;
  for (auto& [name, o] : named) {
    vertex_of.emplace(o, static_cast<int>(labels.size()));
    labels.push_back(std::move(name));
    orientations.push_back(std::move(o));
  }
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < orientations.size(); ++v)
    for (std::size_t i = 0; i < count; ++i) {
      if (i == w.trivial_index()) continue;
      Orientation o = orientations[v];
      o.flip(i);
      auto it = vertex_of.find(o);
      if (it != vertex_of.end() && static_cast<std::size_t>(it->second) > v)
        edges.emplace_back(static_cast<int>(v), it->second);
    }

  auto certified = certify_median_graph(SimpleGraph(std::move(labels), std::move(edges)));
  if (!std::holds_alternative<MedianGraphCert>(certified))
    throw ConsistencyError("cubulation is not a median graph");
  CubulationResult out{std::get<MedianGraphCert>(std::move(certified)), std::move(orientations), {},
                       {}};
  const auto& cert = out.cert;

  for (int x = 0; x < static_cast<int>(w.size()); ++x)
    out.embedding.push_back(vertex_of.at(principal_orientation(w, x)));
  for (int x = 0; x < static_cast<int>(w.size()); ++x)
    for (int y = x + 1; y < static_cast<int>(w.size()); ++y)
      if (wall_metric(w, x, y) != cert.dist(out.embedding[x], out.embedding[y]))
        throw ConsistencyError("cubulation embedding is not isometric");

  // Median closure of the image, grown by a worklist over new points.
  const std::size_t n = cert.size();
  PointSet closure(n);
  std::vector<int> inside;
  std::vector<int> work(out.embedding.begin(), out.embedding.end());
  while (!work.empty()) {
    int p = work.back();
    work.pop_back();
    if (closure.test(static_cast<std::size_t>(p))) continue;
    closure.set(static_cast<std::size_t>(p));
    inside.push_back(p);
    for (std::size_t a = 0; a < inside.size(); ++a)
      for (std::size_t b = a + 1; b < inside.size(); ++b) {
        int m = cert.median(p, inside[a], inside[b]);
        if (!closure.test(static_cast<std::size_t>(m))) work.push_back(m);
      }
  }
  if (!closure.all()) throw ConsistencyError("cubulation is not the median closure of its points");

  std::set<int> used;
  for (std::size_t i = 0; i < count; ++i) {
    if (i == w.trivial_index()) {
      out.wall_correspondence.push_back(-1);
      continue;
    }
    PointSet part(n);
    for (std::size_t v = 0; v < n; ++v)
      if (!out.orientations[v].test(i)) part.set(v);
    if (!part.test(0)) part.flip();
    int found = -1;
    for (std::size_t j = 0; j < cert.walls().size(); ++j)
      if (cert.walls()[j].side == part) found = static_cast<int>(j);
    if (found < 0 || !used.insert(found).second)
      throw ConsistencyError("input walls do not match the cubulation walls");
    out.wall_correspondence.push_back(found);
  }
  if (used.size() != cert.walls().size())
    throw ConsistencyError("cubulation has walls with no input counterpart");
  return out;
}

MorphismExtension extend_morphism(std::span<const int> f, const WallSpace& w1,
                                  const WallSpace& w2, std::size_t cap) {
  if (!is_wall_morphism(f, w1, w2)) throw InputError("map is not a morphism of wall spaces");
  MorphismExtension out{cubulate(w1, cap), cubulate(w2, cap), {}};

  // For each target wall: the source wall carrying its preimage, and whether
  // the stored sides correspond (0), are swapped (1), or the preimage is
  // trivial (forced choice).
  struct Rule {
    int source_wall = -1;
    bool swapped = false;
    bool forced_complement = false;
  };
  std::vector<Rule> rules;
  const std::size_t n1 = w1.size();
  for (const auto& wall : w2.walls()) {
    PointSet pre(n1);
    for (std::size_t x = 0; x < n1; ++x)
      if (wall.side.test(static_cast<std::size_t>(f[x]))) pre.set(x);
    Rule r;
    if (pre.none()) {
      r.forced_complement = true;
    } else if (!pre.all()) {
      r.source_wall = w1.find_wall(pre);
      r.swapped = w1.walls()[static_cast<std::size_t>(r.source_wall)].side != pre;
    }
    rules.push_back(r);
  }

  std::map<Orientation, int> target_vertex;
  for (std::size_t v = 0; v < out.target.orientations.size(); ++v)
    target_vertex.emplace(out.target.orientations[v], static_cast<int>(v));
  for (const auto& o : out.source.orientations) {
    Orientation image(w2.walls().size());
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const auto& r = rules[j];
      bool chooses_complement =
          r.forced_complement ||
          (r.source_wall >= 0 && (o.test(static_cast<std::size_t>(r.source_wall)) != r.swapped));
      if (chooses_complement) image.set(j);
    }
    auto it = target_vertex.find(image);
    if (it == target_vertex.end())
      throw ConsistencyError("extended morphism leaves the target cubulation");
    out.map.push_back(it->second);
  }

  for (std::size_t x = 0; x < n1; ++x)
    if (out.map[static_cast<std::size_t>(out.source.embedding[x])] !=
        out.target.embedding[static_cast<std::size_t>(f[x])])
      throw ConsistencyError("extended morphism disagrees with the map on points");
  const auto& src = out.source.cert;
  const auto& dst = out.target.cert;
  const int ns = static_cast<int>(src.size());
  for (int x = 0; x < ns; ++x)
    for (int y = x + 1; y < ns; ++y)
      for (int t = 0; t < ns; ++t)
        if (src.in_interval(t, x, y) && !dst.in_interval(out.map[t], out.map[x], out.map[y]))
          throw ConsistencyError("extended morphism does not preserve intervals");
  return out;
}

}  // namespace medgeo
