#include "medgeo/median_algebra.hpp"

#include "medgeo/errors.hpp"

#include <algorithm>
#include <functional>

namespace medgeo {

void IntervalStructure::check_wellformed() const {
  const std::size_t n = size();
  if (n == 0) throw InputError("interval structure has no points");
  if (intervals.size() != n * n)
    throw InputError("interval structure needs " + std::to_string(n * n) + " intervals, got " +
                     std::to_string(intervals.size()));
  for (const auto& s : intervals)
    if (s.size() != n) throw InputError("interval references a point outside the ground set");
}

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::MA1: return "MA1";
    case Axiom::MA2: return "MA2";
    case Axiom::MA3: return "MA3";
    case Axiom::MA4: return "MA4";
  }
  return "?";
}

bool AxiomReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.pass; });
}

int common_point(const PointSet& a, const PointSet& b, const PointSet& c) {
  int found = -1;
  int count = 0;
  for (auto i = a.find_first(); i != PointSet::npos; i = a.find_next(i)) {
    if (b.test(i) && c.test(i)) {
      if (count == 0) found = static_cast<int>(i);
      ++count;
    }
  }
  if (count == 0) return -1;
  if (count == 1) return found;
  return -count;
}

AxiomReport validate_axioms(const IntervalStructure& s) {
  s.check_wellformed();
  const int n = static_cast<int>(s.size());
  AxiomReport report{{AxiomResult{Axiom::MA1}, AxiomResult{Axiom::MA2}, AxiomResult{Axiom::MA3},
                      AxiomResult{Axiom::MA4}}};
  auto fail = [&](Axiom a, std::vector<int> witness, std::string detail) {
    auto& r = report.results[static_cast<std::size_t>(a)];
    if (!r.pass) return;
    r.pass = false;
    r.witness = std::move(witness);
    r.detail = std::move(detail);
  };

  for (int x = 0; x < n; ++x) {
    if (s.interval(x, x) != singleton(s.size(), x))
      fail(Axiom::MA1, {x}, "[x,x] != {x}");
  }
  for (int x = 0; x < n && report[Axiom::MA2].pass; ++x)
    for (int y = x + 1; y < n; ++y)
      if (s.interval(x, y) != s.interval(y, x)) {
        fail(Axiom::MA2, {x, y}, "[x,y] != [y,x]");
        break;
      }
  for (int x = 0; x < n && report[Axiom::MA3].pass; ++x)
    for (int y = 0; y < n && report[Axiom::MA3].pass; ++y) {
      const auto& xy = s.interval(x, y);
      for (auto z = xy.find_first(); z != PointSet::npos; z = xy.find_next(z)) {
        if (!s.interval(x, static_cast<int>(z)).is_subset_of(xy)) {
          fail(Axiom::MA3, {x, y, static_cast<int>(z)}, "z in [x,y] but [x,z] not in [x,y]");
          break;
        }
      }
    }
  for (int x = 0; x < n && report[Axiom::MA4].pass; ++x)
    for (int y = 0; y < n && report[Axiom::MA4].pass; ++y)
      for (int z = 0; z < n; ++z) {
        int m = common_point(s.interval(x, y), s.interval(y, z), s.interval(z, x));
        if (m < 0) {
          fail(Axiom::MA4, {x, y, z},
               m == -1 ? "no common point" : std::to_string(-m) + " common points");
          break;
        }
      }
  return report;
}

FiniteMedianAlgebra FiniteMedianAlgebra::from(IntervalStructure s) {
  auto report = validate_axioms(s);
  for (const auto& r : report.results)
    if (!r.pass) {
      std::string w;
      for (int i : r.witness) w += (w.empty() ? "" : ",") + s.points[static_cast<std::size_t>(i)];
      throw InputError("not a median algebra: " + axiom_name(r.axiom) + " fails at (" + w +
                       "): " + r.detail);
    }
  const int n = static_cast<int>(s.size());
  MedianTable table(s.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        table.set(x, y, z, common_point(s.interval(x, y), s.interval(y, z), s.interval(z, x)));
  return FiniteMedianAlgebra(std::move(s), std::move(table));
}

int FiniteMedianAlgebra::index_of(const std::string& label) const {
  return find_label(points(), label);
}

bool is_convex(const FiniteMedianAlgebra& a, const PointSet& s) {
  for (auto x = s.find_first(); x != PointSet::npos; x = s.find_next(x))
    for (auto y = s.find_next(x); y != PointSet::npos; y = s.find_next(y))
      if (!a.interval(static_cast<int>(x), static_cast<int>(y)).is_subset_of(s)) return false;
  return true;
}

PointSet convex_hull(const FiniteMedianAlgebra& a, const PointSet& s) {
  PointSet hull = s;
  std::vector<int> work = members(s);
  std::vector<int> done;
  while (!work.empty()) {
    int u = work.back();
    work.pop_back();
    done.push_back(u);
    for (int v : done) {
      PointSet fresh = a.interval(u, v) - hull;
      if (fresh.none()) continue;
      hull |= fresh;
      for (int w : members(fresh)) work.push_back(w);
    }
  }
  return hull;
}

std::vector<Halfspace> enumerate_halfspaces(const FiniteMedianAlgebra& a, std::size_t cap) {
  const std::size_t n = a.size();
  if (n > cap)
    throw ResourceError("halfspace enumeration capped at " + std::to_string(cap) +
                        " points, algebra has " + std::to_string(n));
  std::vector<Halfspace> out;
  // Both sides stay convex hulls; a branch is pruned once the hulls meet.
  std::function<void(const PointSet&, const PointSet&)> grow = [&](const PointSet& side,
                                                                   const PointSet& other) {
    PointSet assigned = side | other;
    auto next = (~assigned).find_first();
    if (next == PointSet::npos) {
      out.push_back(Halfspace{side});
      return;
    }
    PointSet with = side;
    with.set(next);
    with = convex_hull(a, with);
    if (!with.intersects(other)) grow(with, other);
    PointSet against = other;
    against.set(next);
    against = convex_hull(a, against);
    if (!against.intersects(side)) grow(side, against);
  };
  grow(convex_hull(a, singleton(n, 0)), PointSet(n));
  std::sort(out.begin(), out.end(),
            [](const Halfspace& l, const Halfspace& r) { return lex_less(l.side, r.side); });
  return out;
}

PointSet separate(const FiniteMedianAlgebra& a, const PointSet& c1, const PointSet& c2,
                  std::size_t cap) {
  if (c1.none() || c2.none()) throw InputError("separate: both sets must be nonempty");
  if (c1.intersects(c2)) throw InputError("separate: sets must be disjoint");
  if (!is_convex(a, c1) || !is_convex(a, c2)) throw InputError("separate: sets must be convex");
  for (const auto& h : enumerate_halfspaces(a, cap)) {
    if (c1.is_subset_of(h.side) && !c2.intersects(h.side)) return h.side;
    PointSet co = h.complement();
    if (c1.is_subset_of(co) && !c2.intersects(co)) return co;
  }
  throw ConsistencyError("separate: no halfspace separates two disjoint convex sets");
}

PointSet median_closure(const FiniteMedianAlgebra& a, const PointSet& s) {
  PointSet closed = s;
  bool changed = true;
  while (changed) {
    changed = false;
    auto ids = members(closed);
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j)
        for (std::size_t k = j + 1; k < ids.size(); ++k) {
          auto m = static_cast<std::size_t>(a.median(ids[i], ids[j], ids[k]));
          if (!closed.test(m)) {
            closed.set(m);
            changed = true;
          }
        }
  }
  return closed;
}

bool is_median_stable(const FiniteMedianAlgebra& a, const PointSet& s) {
  auto ids = members(s);
  for (int x : ids)
    for (int y : ids)
      for (int z : ids)
        if (!s.test(static_cast<std::size_t>(a.median(x, y, z)))) return false;
  return true;
}

namespace {

void check_map(std::span<const int> f, const FiniteMedianAlgebra& a, const FiniteMedianAlgebra& b) {
  if (f.size() != a.size()) throw InputError("map must be total on the source points");
  for (int v : f)
    if (v < 0 || static_cast<std::size_t>(v) >= b.size())
      throw InputError("map sends a point outside the target");
}

PointSet preimage(std::span<const int> f, const PointSet& target, std::size_t n) {
  PointSet pre(n);
  for (std::size_t x = 0; x < n; ++x)
    if (target.test(static_cast<std::size_t>(f[x]))) pre.set(x);
  return pre;
}

}  // namespace

bool preserves_intervals(std::span<const int> f, const FiniteMedianAlgebra& a,
                         const FiniteMedianAlgebra& b) {
  check_map(f, a, b);
  const int n = static_cast<int>(a.size());
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const auto& target = b.interval(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)]);
      const auto& xy = a.interval(x, y);
      for (auto t = xy.find_first(); t != PointSet::npos; t = xy.find_next(t))
        if (!target.test(static_cast<std::size_t>(f[t]))) return false;
    }
  return true;
}

bool pulls_back_halfspaces(std::span<const int> f, const FiniteMedianAlgebra& a,
                           const FiniteMedianAlgebra& b, std::size_t cap) {
  check_map(f, a, b);
  for (const auto& h : enumerate_halfspaces(b, cap)) {
    PointSet pre = preimage(f, h.side, a.size());
    if (!is_convex(a, pre) || !is_convex(a, ~pre)) return false;
  }
  return true;
}

bool is_median_morphism(std::span<const int> f, const FiniteMedianAlgebra& a,
                        const FiniteMedianAlgebra& b, std::size_t cap) {
  bool by_intervals = preserves_intervals(f, a, b);
  if (b.size() <= cap) {
    bool by_halfspaces = pulls_back_halfspaces(f, a, b, cap);
    if (by_intervals != by_halfspaces)
      throw ConsistencyError("interval and halfspace morphism criteria disagree");
  }
  return by_intervals;
}

}  // namespace medgeo
