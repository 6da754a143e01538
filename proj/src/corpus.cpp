#include "medgeo/corpus.hpp"

#include "medgeo/errors.hpp"

#include <random>
#include <set>

namespace medgeo {

namespace {

Labels numbered(const std::string& prefix, int n) {
  Labels out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

int parse_count(const std::string& spec, const std::string& text, int min) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || v < min)
    throw InputError("bad size in corpus spec '" + spec + "'");
  return v;
}

}  // namespace

SimpleGraph path_graph(int n) {
  if (n < 1) throw InputError("path needs at least one vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return SimpleGraph(numbered("p", n), std::move(edges));
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return SimpleGraph(numbered("c", n), std::move(edges));
}

SimpleGraph hypercube_graph(int k) {
  if (k < 0 || k > 16) throw InputError("hypercube dimension must be in 0..16");
  const int n = 1 << k;
  Labels labels;
  for (int v = 0; v < n; ++v) {
    std::string s;
    for (int b = k - 1; b >= 0; --b) s += (v >> b & 1) ? '1' : '0';
    labels.push_back(k == 0 ? "e" : s);
  }
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < k; ++b)
      if (!(v >> b & 1)) edges.emplace_back(v, v | (1 << b));
  return SimpleGraph(std::move(labels), std::move(edges));
}

SimpleGraph grid_graph(int m, int n) {
  if (m < 1 || n < 1) throw InputError("grid sides must be positive");
  Labels labels;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      if (i + 1 < m) edges.emplace_back(i * n + j, (i + 1) * n + j);
      if (j + 1 < n) edges.emplace_back(i * n + j, i * n + j + 1);
    }
  return SimpleGraph(std::move(labels), std::move(edges));
}

SimpleGraph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("tree needs at least one vertex");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  return SimpleGraph(numbered("t", n), std::move(edges));
}

SimpleGraph star_graph(int leaves) {
  if (leaves < 0) throw InputError("star needs a nonnegative number of leaves");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return SimpleGraph(numbered("s", leaves + 1), std::move(edges));
}

SimpleGraph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw InputError("bipartite sides must be positive");
  Labels labels = numbered("a", a);
  for (auto& l : numbered("b", b)) labels.push_back(l);
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return SimpleGraph(std::move(labels), std::move(edges));
}

IntervalStructure asymmetric_interval_fixture() {
  IntervalStructure s;
  s.points = {"x", "y", "z"};
  auto set = [](std::initializer_list<int> m) { return make_set(3, std::vector<int>(m)); };
  const int x = 0, y = 1, z = 2;
  s.intervals = {
      set({x}),       set({x, y, z}), set({x, y, z}),
      set({x, y}),    set({y}),       set({y, z}),
      set({x, z}),    set({y, z}),    set({z}),
  };
  return s;
}

WallSpace random_wall_space(int points, int walls, std::uint64_t seed) {
  if (points < 1 || points > 20) throw InputError("random wall spaces take 1..20 points");
  const std::uint64_t distinct = (1ULL << (points - 1)) - 1;
  if (walls < 0 || static_cast<std::uint64_t>(walls) > distinct)
    throw InputError("too many walls requested for " + std::to_string(points) + " points");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, distinct - (distinct > 0 ? 1 : 0));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::set<std::uint64_t> chosen;
    while (chosen.size() < static_cast<std::size_t>(walls)) {
      // Side holding point 0, with a nonempty complement.
      std::uint64_t rest = pick(rng) + 1;
      chosen.insert(((~rest << 1) | 1) & ((1ULL << points) - 1));
    }
    std::vector<PointSet> sides;
    for (auto mask : chosen) {
      PointSet s(static_cast<std::size_t>(points));
      for (int i = 0; i < points; ++i)
        if (mask >> i & 1) s.set(static_cast<std::size_t>(i));
      sides.push_back(std::move(s));
    }
    try {
      return WallSpace(numbered("x", points), std::move(sides));
    } catch (const InputError&) {
      continue;
    }
  }
  throw InputError("could not draw " + std::to_string(walls) + " separating walls on " +
                   std::to_string(points) + " points");
}

CorpusInstance generate_instance(const std::string& spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto need_arg = [&] {
    if (arg.empty()) throw InputError("corpus spec '" + spec + "' needs a size");
  };
  auto graph_instance = [&](const SimpleGraph& g, bool median, const std::string& cls) {
    CorpusInstance inst{spec, "graph", as_json(g)};
    inst.document["expected"] = {{"median_graph", median}, {"classification", cls}};
    return inst;
  };
  if (name == "path") {
    need_arg();
    return graph_instance(path_graph(parse_count(spec, arg, 1)), true, "median");
  }
  if (name == "cycle") {
    need_arg();
    int n = parse_count(spec, arg, 3);
    return graph_instance(cycle_graph(n), n == 4, n == 4 ? "median" : "neither");
  }
  if (name == "cube") {
    need_arg();
    return graph_instance(hypercube_graph(parse_count(spec, arg, 0)), true, "median");
  }
  if (name == "grid") {
    need_arg();
    auto x = arg.find('x');
    if (x == std::string::npos) throw InputError("grid spec needs MxN, got '" + spec + "'");
    return graph_instance(grid_graph(parse_count(spec, arg.substr(0, x), 1),
                                     parse_count(spec, arg.substr(x + 1), 1)),
                          true, "median");
  }
  if (name == "tree") {
    need_arg();
    CorpusInstance inst = graph_instance(random_tree(parse_count(spec, arg, 1), seed), true, "median");
    inst.document["seed"] = seed;
    return inst;
  }
  if (name == "star") {
    need_arg();
    return graph_instance(star_graph(parse_count(spec, arg, 0)), true, "median");
  }
  if (name == "k23" && arg.empty()) return graph_instance(complete_bipartite(2, 3), false, "modular");
  if (name == "asymmetric-interval" && arg.empty()) {
    CorpusInstance inst{spec, "intervals", as_json(asymmetric_interval_fixture())};
    inst.document["expected"] = {{"axioms", {{"MA1", true}, {"MA2", false}, {"MA3", true}, {"MA4", true}}}};
    return inst;
  }
  if (name == "walls") {
    need_arg();
    auto x = arg.find('x');
    if (x == std::string::npos) throw InputError("walls spec needs PxW, got '" + spec + "'");
    WallSpace w = random_wall_space(parse_count(spec, arg.substr(0, x), 1),
                                    parse_count(spec, arg.substr(x + 1), 0), seed);
    Json doc = as_json(w);
    Json nontrivial = Json::array();
    for (std::size_t i = 0; i < w.walls().size(); ++i)
      if (i != w.trivial_index()) nontrivial.push_back(doc["walls"][i]);
    doc["walls"] = std::move(nontrivial);
    doc["seed"] = seed;
    doc["expected"] = {{"kind", "wall-space"}};
    return CorpusInstance{spec, "walls", std::move(doc)};
  }
  throw InputError("unknown corpus generator '" + spec + "'");
}

std::vector<std::string> standard_corpus_specs() {
  return {"path:1",  "path:2",   "path:4",   "path:7",   "cycle:3", "cycle:4", "cycle:5",
          "cycle:6", "cube:1",   "cube:2",   "cube:3",   "cube:4",  "grid:2x3", "grid:3x3",
          "grid:3x4", "tree:10", "tree:25",  "tree:50",  "star:4",  "k23",     "asymmetric-interval",
          "walls:4x4", "walls:5x6", "walls:6x8", "walls:7x10"};
}

}  // namespace medgeo
