#include "medgeo/io.hpp"

#include "medgeo/errors.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace medgeo {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json read_json_file(const std::string& path) { return parse_json(read_text_file(path)); }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string label_of(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw InputError("labels must be strings or integers, got " + v.dump());
}

int lookup(const Labels& labels, const Json& v) {
  std::string name = label_of(v);
  int i = find_label(labels, name);
  if (i < 0) throw InputError("unknown point '" + name + "'");
  return i;
}

PointSet set_from_json(const Json& j, const Labels& labels) {
  if (!j.is_array()) throw InputError("expected a list of points, got " + j.dump());
  PointSet s(labels.size());
  for (const auto& v : j) s.set(static_cast<std::size_t>(lookup(labels, v)));
  return s;
}

Rational rational_of(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_float()) return parse_rational(v.dump());
  throw InputError("distances must be rationals, got " + v.dump());
}

}  // namespace

Labels labels_from_json(const Json& j, const char* key) {
  const Json& arr = field(j, key);
  if (!arr.is_array()) throw InputError(std::string("'") + key + "' must be a list");
  Labels out;
  std::set<std::string> seen;
  for (const auto& v : arr) {
    out.push_back(label_of(v));
    if (!seen.insert(out.back()).second) throw InputError("duplicate point '" + out.back() + "'");
  }
  if (out.empty()) throw InputError(std::string("'") + key + "' is empty");
  return out;
}

IntervalStructure interval_structure_from_json(const Json& j) {
  IntervalStructure s;
  s.points = labels_from_json(j, "points");
  const std::size_t n = s.size();
  const Json& table = field(j, "intervals");
  if (!table.is_object()) throw InputError("'intervals' must be an object");
  std::vector<std::optional<PointSet>> slots(n * n);
  for (const auto& [key, value] : table.items()) {
    std::optional<std::pair<int, int>> pair;
    for (std::size_t cut = key.find(','); cut != std::string::npos; cut = key.find(',', cut + 1)) {
      int x = find_label(s.points, key.substr(0, cut));
      int y = find_label(s.points, key.substr(cut + 1));
      if (x < 0 || y < 0) continue;
      if (pair) throw InputError("ambiguous interval key '" + key + "'");
      pair = std::pair{x, y};
    }
    if (!pair) throw InputError("interval key '" + key + "' does not name two points");
    auto& slot = slots[static_cast<std::size_t>(pair->first) * n + static_cast<std::size_t>(pair->second)];
    if (slot) throw InputError("interval '" + key + "' given twice");
    slot = set_from_json(value, s.points);
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto& slot = slots[x * n + y];
      if (!slot) {
        if (x != y)
          throw InputError("missing interval '" + s.points[x] + "," + s.points[y] + "'");
        slot = singleton(n, static_cast<int>(x));
      }
      s.intervals.push_back(std::move(*slot));
    }
  return s;
}

Json as_json(const IntervalStructure& s) {
  Json j;
  j["points"] = s.points;
  Json table = Json::object();
  const int n = static_cast<int>(s.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      table[s.points[x] + "," + s.points[y]] = member_labels(s.interval(x, y), s.points);
  j["intervals"] = std::move(table);
  return j;
}

FiniteMetric metric_from_json(const Json& j) {
  if (j.is_object() && j.contains("vertices") && j.contains("edges") && !j.contains("dist"))
    return graph_from_json(j).path_metric();
  Labels points = labels_from_json(j, "points");
  const auto n = static_cast<Eigen::Index>(points.size());
  const Json& rows = field(j, "dist");
  if (!rows.is_array()) throw InputError("'dist' must be a list of rows");
  RationalMatrix d = RationalMatrix::Zero(n, n);
  auto shape_error = [&] {
    return InputError("'dist' must be the strict upper triangle, the upper triangle, or the full "
                      "matrix of " + std::to_string(n) + " points");
  };
  bool all_full = rows.size() == static_cast<std::size_t>(n);
  for (const auto& r : rows)
    if (!r.is_array() || r.size() != static_cast<std::size_t>(n)) all_full = false;
  if (all_full) {
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j2 = 0; j2 < n; ++j2)
        d(i, j2) = rational_of(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j2)]);
    return FiniteMetric(std::move(points), std::move(d));
  }
  // Triangle forms: row i starts at column i (with diagonal) or i + 1.
  const std::size_t rows_n = rows.size();
  const std::size_t size = static_cast<std::size_t>(n);
  auto fits = [&](std::size_t offset) {
    for (std::size_t i = 0; i < rows_n; ++i)
      if (!rows[i].is_array() || rows[i].size() + i + offset != size) return false;
    return true;
  };
  std::size_t offset;
  if (rows_n == size && fits(0)) offset = 0;
  else if (rows_n + 1 == size && fits(1)) offset = 1;
  else throw shape_error();
  for (std::size_t i = 0; i < rows_n; ++i)
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      const auto row = static_cast<Eigen::Index>(i);
      const auto col = static_cast<Eigen::Index>(i + k + offset);
      Rational v = rational_of(rows[i][k]);
      if (row == col) {
        if (v != 0) throw InputError("nonzero diagonal entry for '" + points[i] + "'");
        continue;
      }
      d(row, col) = v;
      d(col, row) = v;
    }
  return FiniteMetric(std::move(points), std::move(d));
}

Json as_json(const FiniteMetric& m) {
  Json j;
  j["points"] = m.points();
  Json rows = Json::array();
  const int n = static_cast<int>(m.size());
  for (int i = 0; i + 1 < n; ++i) {
    Json row = Json::array();
    for (int k = i + 1; k < n; ++k) row.push_back(to_string(m.dist(i, k)));
    rows.push_back(std::move(row));
  }
  j["dist"] = std::move(rows);
  return j;
}

SimpleGraph graph_from_json(const Json& j) {
  Labels vertices = labels_from_json(j, "vertices");
  const Json& list = field(j, "edges");
  if (!list.is_array()) throw InputError("'edges' must be a list");
  std::vector<Edge> edges;
  for (const auto& e : list) {
    if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair, got " + e.dump());
    edges.emplace_back(lookup(vertices, e[0]), lookup(vertices, e[1]));
  }
  return SimpleGraph(std::move(vertices), std::move(edges));
}

Json as_json(const SimpleGraph& g) {
  Json j;
  j["vertices"] = g.labels();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges())
    edges.push_back(Json::array({g.labels()[static_cast<std::size_t>(u)],
                                 g.labels()[static_cast<std::size_t>(v)]}));
  j["edges"] = std::move(edges);
  return j;
}

WallSpace walls_from_json(const Json& j) {
  Labels points = labels_from_json(j, "points");
  const std::size_t n = points.size();
  const Json& list = field(j, "walls");
  if (!list.is_array()) throw InputError("'walls' must be a list");
  std::vector<PointSet> sides;
  for (const auto& w : list) {
    if (!w.is_array() || w.size() != 2)
      throw InputError("wall must be a pair of sides, got " + w.dump());
    PointSet a = set_from_json(w[0], points);
    PointSet b = set_from_json(w[1], points);
    if (a.intersects(b) || (a | b) != full_set(n))
      throw InputError("wall " + w.dump() + " does not partition the points");
    sides.push_back(std::move(a));
  }
  return WallSpace(std::move(points), std::move(sides));
}

Json as_json(const WallSpace& w) {
  Json j;
  j["points"] = w.points();
  Json list = Json::array();
  for (const auto& wall : w.walls())
    list.push_back(Json::array({member_labels(wall.side, w.points()),
                                member_labels(wall.complement(), w.points())}));
  j["walls"] = std::move(list);
  return j;
}

FiniteAction action_from_json(const Json& j, const Labels& points) {
  FiniteAction a;
  a.points = points;
  const Json& gens = field(j, "generators");
  if (!gens.is_object()) throw InputError("'generators' must be an object");
  for (const auto& [name, table] : gens.items()) {
    if (!table.is_object()) throw InputError("generator '" + name + "' must map points to points");
    Permutation g(points.size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = static_cast<int>(i);
    for (const auto& [from, to] : table.items())
      g[static_cast<std::size_t>(lookup(points, Json(from)))] = lookup(points, to);
    a.generators.emplace(name, std::move(g));
  }
  a.basepoint = j.contains("basepoint") ? lookup(points, j.at("basepoint")) : 0;
  a.validate();
  return a;
}

PointCloud points_from_json(const Json& j) {
  PointCloud c;
  c.norm = j.contains("norm") ? parse_norm(label_of(j.at("norm"))) : Norm::euclidean();
  const Json& list = field(j, "points");
  if (!list.is_array()) throw InputError("'points' must be a list of coordinate lists");
  for (const auto& p : list) {
    if (!p.is_array()) throw InputError("point must be a coordinate list, got " + p.dump());
    Eigen::VectorXd v(static_cast<Eigen::Index>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].is_number()) v(static_cast<Eigen::Index>(i)) = p[i].get<double>();
      else if (p[i].is_string()) v(static_cast<Eigen::Index>(i)) = to_double(parse_rational(p[i].get<std::string>()));
      else throw InputError("coordinate must be a number, got " + p[i].dump());
    }
    c.points.push_back(std::move(v));
  }
  c.validate();
  return c;
}

Json as_json(const CubeComplex& c, const Labels& labels) {
  Json cubes = Json::object();
  for (const auto& [dim, list] : c.cubes) {
    Json entries = Json::array();
    for (const auto& cube : list) {
      Json vs = Json::array();
      for (int v : cube) vs.push_back(labels[static_cast<std::size_t>(v)]);
      entries.push_back(std::move(vs));
    }
    cubes[std::to_string(dim)] = std::move(entries);
  }
  Json j;
  j["cubes"] = std::move(cubes);
  j["max_dim"] = c.max_dim;
  return j;
}

Json as_json(const Rational& r) { return to_string(r); }

Json as_json(const PointSet& s, const Labels& labels) { return member_labels(s, labels); }

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const MedianGraphCert& g) {
  static constexpr std::array<const char*, 10> palette{
      "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4", "gold3", "gray40"};
  std::ostringstream out;
  out << "graph median {\n";
  for (const auto& v : g.labels()) out << "  " << dot_quote(v) << ";\n";
  const auto& edges = g.graph().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int wall = g.edge_wall()[i];
    out << "  " << dot_quote(g.labels()[static_cast<std::size_t>(edges[i].first)]) << " -- "
        << dot_quote(g.labels()[static_cast<std::size_t>(edges[i].second)])
        << " [color=" << palette[static_cast<std::size_t>(wall) % palette.size()]
        << ", label=\"w" << wall << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace medgeo
