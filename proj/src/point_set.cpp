#include "medgeo/point_set.hpp"

#include <algorithm>

namespace medgeo {

PointSet make_set(std::size_t n, std::span<const int> ids) {
  PointSet s(n);
  for (int id : ids) s.set(static_cast<std::size_t>(id));
  return s;
}

PointSet singleton(std::size_t n, int member) {
  PointSet s(n);
  s.set(static_cast<std::size_t>(member));
  return s;
}

PointSet full_set(std::size_t n) {
  PointSet s(n);
  s.set();
  return s;
}

std::vector<int> members(const PointSet& s) {
  std::vector<int> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i))
    out.push_back(static_cast<int>(i));
  return out;
}

bool lex_less(const PointSet& a, const PointSet& b) {
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != PointSet::npos && j != PointSet::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return i == PointSet::npos && j != PointSet::npos;
}

int find_label(const Labels& labels, const std::string& label) {
  auto it = std::find(labels.begin(), labels.end(), label);
  return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

std::vector<std::string> member_labels(const PointSet& s, const Labels& labels) {
  std::vector<std::string> out;
  for (int i : members(s)) out.push_back(labels[static_cast<std::size_t>(i)]);
  return out;
}

std::string format_set(const PointSet& s, const Labels& labels) {
  std::string out = "{";
  bool first = true;
  for (int i : members(s)) {
    if (!first) out += ",";
    out += labels[static_cast<std::size_t>(i)];
    first = false;
  }
  return out + "}";
}

}  // namespace medgeo
