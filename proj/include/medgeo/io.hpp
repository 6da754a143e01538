#pragma once

#include "medgeo/action.hpp"
#include "medgeo/convexity.hpp"
#include "medgeo/finite_metric.hpp"
#include "medgeo/median_algebra.hpp"
#include "medgeo/median_graph.hpp"
#include "medgeo/wall_space.hpp"

#include <json.hpp>

#include <string>

namespace medgeo {

using Json = nlohmann::ordered_json;

/// Parse errors become InputError.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

Labels labels_from_json(const Json& j, const char* key);

/// {"points": [...], "intervals": {"x,y": [...]}}; every ordered pair with
/// x != y must be present. [x,x] defaults to {x} when absent.
IntervalStructure interval_structure_from_json(const Json& j);
Json as_json(const IntervalStructure& s);

/// {"points": [...], "dist": rows}. The rows may be the strict upper
/// triangle (row i holding d(i,i+1..n-1)), the upper triangle with the
/// diagonal, or the full matrix. Entries are "p/q" strings or numbers.
/// A graph document ({"vertices", "edges"}) yields its path metric.
FiniteMetric metric_from_json(const Json& j);
/// Writes the strict upper triangle.
Json as_json(const FiniteMetric& m);

/// {"vertices": [...], "edges": [[u, v], ...]}
SimpleGraph graph_from_json(const Json& j);
Json as_json(const SimpleGraph& g);

/// {"points": [...], "walls": [[[A...], [B...]], ...]}. Each wall must
/// partition the points.
WallSpace walls_from_json(const Json& j);
Json as_json(const WallSpace& w);

/// {"generators": {"g": {"a": "b", ...}}, "basepoint": "a"}. Points missing
/// from a generator's table are fixed.
FiniteAction action_from_json(const Json& j, const Labels& points);

/// {"norm": "euclidean", "points": [[x, y, ...], ...]}
PointCloud points_from_json(const Json& j);

/// {"cubes": {"1": [[v, ...], ...], "2": ...}}
Json as_json(const CubeComplex& c, const Labels& labels);

Json as_json(const Rational& r);
Json as_json(const PointSet& s, const Labels& labels);

/// Graphviz text: one node per vertex, edges colored by wall.
std::string to_dot(const MedianGraphCert& g);

}  // namespace medgeo
