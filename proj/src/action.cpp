#include "medgeo/action.hpp"

#include "medgeo/embedding.hpp"
#include "medgeo/errors.hpp"

#include <cmath>
#include <sstream>

namespace medgeo {

void FiniteAction::validate() const {
  const std::size_t n = points.size();
  if (basepoint < 0 || static_cast<std::size_t>(basepoint) >= n)
    throw InputError("basepoint out of range");
  for (const auto& [name, g] : generators) {
    if (g.size() != n) throw InputError("generator '" + name + "' is not defined on every point");
    std::vector<bool> hit(n, false);
    for (int v : g) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || hit[static_cast<std::size_t>(v)])
        throw InputError("generator '" + name + "' is not a bijection");
      hit[static_cast<std::size_t>(v)] = true;
    }
  }
}

Permutation evaluate_word(const FiniteAction& a, const std::string& word) {
  const std::size_t n = a.points.size();
  Permutation result(n);
  for (std::size_t i = 0; i < n; ++i) result[i] = static_cast<int>(i);
  std::istringstream in(word);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
    std::string name = *it;
    bool inverse = false;
    if (name.size() > 3 && name.ends_with("^-1")) {
      inverse = true;
      name.resize(name.size() - 3);
    }
    auto found = a.generators.find(name);
    if (found == a.generators.end()) throw InputError("unknown generator '" + name + "'");
    Permutation g = found->second;
    if (inverse) {
      Permutation inv(n);
      for (std::size_t i = 0; i < n; ++i) inv[static_cast<std::size_t>(g[i])] = static_cast<int>(i);
      g = std::move(inv);
    }
    for (auto& v : result) v = g[static_cast<std::size_t>(v)];
  }
  return result;
}

void require_isometric(const FiniteAction& a, const FiniteMetric& m) {
  if (a.points != m.points()) throw InputError("action and metric have different points");
  const int n = static_cast<int>(m.size());
  for (const auto& [name, g] : a.generators)
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (m.dist(x, y) != m.dist(g[x], g[y]))
          throw InputError("generator '" + name + "' changes the distance between " +
                           m.points()[x] + " and " + m.points()[y]);
}

void require_wall_preserving(const FiniteAction& a, const WallSpace& w) {
  if (a.points != w.points()) throw InputError("action and wall space have different points");
  const std::size_t n = w.size();
  for (const auto& [name, g] : a.generators)
    for (const auto& wall : w.walls()) {
      PointSet image(n);
      for (auto x = wall.side.find_first(); x != PointSet::npos; x = wall.side.find_next(x))
        image.set(static_cast<std::size_t>(g[x]));
      if (w.find_wall(image) < 0)
        throw InputError("generator '" + name + "' does not carry wall " +
                         format_set(wall.side, w.points()) + " to a wall");
    }
}

MetricDisplacement action_displacement_metric(const FiniteAction& a, const MedianMetric& m,
                                              const std::string& word, double tol) {
  a.validate();
  require_isometric(a, m.metric());
  const Permutation g = evaluate_word(a, word);
  const int v = a.basepoint;
  const int gv = g[static_cast<std::size_t>(v)];
  MetricDisplacement out;
  out.displacement = m.dist(v, gv);
  const auto gns = gns_embed(m.metric(), tol);
  out.embedded = (gns.coordinates.row(gv) - gns.coordinates.row(v)).squaredNorm();
  out.error = std::abs(out.embedded - to_double(out.displacement));
  out.pass = out.error <= tol;
  return out;
}

std::pair<int, int> action_displacement_walls(const FiniteAction& a, const WallSpace& w,
                                              const std::string& word) {
  a.validate();
  require_wall_preserving(a, w);
  const Permutation g = evaluate_word(a, word);
  const int v = a.basepoint;
  const int gv = g[static_cast<std::size_t>(v)];
  int separating = 0;
  for (const auto& wall : w.walls())
    if (wall.side.test(static_cast<std::size_t>(v)) != wall.side.test(static_cast<std::size_t>(gv)))
      ++separating;
  int difference =
      static_cast<int>((principal_halfspaces(w, v) ^ principal_halfspaces(w, gv)).count());
  if (difference != 2 * separating)
    throw ConsistencyError("halfspace difference is not twice the wall distance");
  return {separating, difference};
}

}  // namespace medgeo
