#include "cli.hpp"

#include "medgeo/action.hpp"
#include "medgeo/convexity.hpp"
#include "medgeo/corpus.hpp"
#include "medgeo/embedding.hpp"
#include "medgeo/errors.hpp"
#include "medgeo/finite_metric.hpp"
#include "medgeo/io.hpp"
#include "medgeo/median_algebra.hpp"
#include "medgeo/median_graph.hpp"
#include "medgeo/wall_space.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

namespace medgeo::cli {

namespace {

struct Options {
  std::string in;
  std::string out;
  std::string format = "json";
  std::string expect;
  bool timings = false;
};

/// Verdict plus the report body. `positive` decides the exit code when no
/// expectation is given.
struct Outcome {
  std::string verdict;
  bool positive = true;
  Json body = Json::object();
};

struct Input {
  std::string path;
  std::string digest;
  Json doc;
};

Input load(const std::string& path) {
  if (path.empty()) throw InputError("--in is required");
  Input in;
  in.path = path;
  std::string text = read_text_file(path);
  in.digest = fnv1a_hex(text);
  in.doc = parse_json(text);
  return in;
}

Json labels_json(const std::vector<int>& idx, const Labels& labels) {
  Json a = Json::array();
  for (int i : idx) a.push_back(labels[static_cast<std::size_t>(i)]);
  return a;
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

Json coordinates_json(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

// ---- subcommands -----------------------------------------------------------

Outcome cmd_axioms(const Input& in) {
  auto s = interval_structure_from_json(in.doc);
  auto report = validate_axioms(s);
  Outcome o;
  o.positive = report.all_pass();
  o.verdict = o.positive ? "median-algebra" : "not-median-algebra";
  Json axioms = Json::object();
  for (const auto& r : report.results) {
    Json a = {{"pass", r.pass}};
    if (!r.pass) {
      a["witness"] = labels_json(r.witness, s.points);
      a["detail"] = r.detail;
    }
    axioms[axiom_name(r.axiom)] = std::move(a);
  }
  o.body["axioms"] = std::move(axioms);
  return o;
}

Outcome cmd_classify(const Input& in) {
  auto m = metric_from_json(in.doc);
  auto c = classify(m);
  Outcome o;
  o.verdict = to_string(c.kind);
  o.positive = c.kind == MetricClass::Median;
  o.body["points"] = m.size();
  if (c.witness) {
    o.body["witness"] = labels_json({(*c.witness)[0], (*c.witness)[1], (*c.witness)[2]}, m.points());
    o.body["intersection"] = as_json(c.intersection, m.points());
  }
  return o;
}

Outcome cmd_certify_graph(const Input& in, const std::string& dot) {
  auto g = graph_from_json(in.doc);
  auto result = certify_median_graph(g);
  Outcome o;
  o.body["vertices"] = g.size();
  o.body["edges"] = g.edges().size();
  if (auto* cert = std::get_if<MedianGraphCert>(&result)) {
    o.verdict = "median";
    o.body["walls"] = cert->walls().size();
    Json walls = Json::array();
    for (const auto& w : cert->walls())
      walls.push_back(Json::array({as_json(w.side, g.labels()), as_json(w.complement(), g.labels())}));
    o.body["wall_sides"] = std::move(walls);
    if (!dot.empty()) write_text_file(dot, to_dot(*cert));
  } else {
    const auto& bad = std::get<NotMedianGraph>(result);
    o.verdict = "not-median";
    o.positive = false;
    o.body["classification"] = to_string(bad.kind);
    o.body["witness"] = labels_json({bad.witness[0], bad.witness[1], bad.witness[2]}, g.labels());
    o.body["intersection"] = as_json(bad.intersection, g.labels());
  }
  return o;
}

Outcome cmd_cubulate(const Input& in, const std::string& dot, std::size_t cap, std::ostream& err) {
  auto w = walls_from_json(in.doc);
  if (w.trivial_added()) err << "warning: trivial wall added to the wall space\n";
  auto result = cubulate(w, cap);
  const auto& cert = result.cert;
  Outcome o;
  o.verdict = "cubulated";
  Json graph = as_json(cert.graph());
  o.body["vertices"] = graph["vertices"];
  o.body["edges"] = graph["edges"];
  Json embedding = Json::object();
  for (std::size_t x = 0; x < w.size(); ++x)
    embedding[w.points()[x]] = cert.labels()[static_cast<std::size_t>(result.embedding[x])];
  o.body["embedding"] = std::move(embedding);
  o.body["walls"] = w.walls().size();
  if (!dot.empty()) write_text_file(dot, to_dot(cert));
  return o;
}

Outcome cmd_fill_cubes(const Input& in, int max_dim) {
  auto cert = require_median_graph(graph_from_json(in.doc));
  auto cubes = fill_cubes(cert, max_dim > 0 ? std::optional<int>(max_dim) : std::nullopt);
  Outcome o;
  o.verdict = "filled";
  Json counts = Json::object();
  for (const auto& [dim, list] : cubes.cubes) counts[std::to_string(dim)] = list.size();
  o.body["counts"] = std::move(counts);
  Json j = as_json(cubes, cert.labels());
  o.body["max_dim"] = j["max_dim"];
  o.body["cubes"] = j["cubes"];
  return o;
}

Outcome cmd_negdef(const Input& in) {
  auto m = metric_from_json(in.doc);
  auto cert = certify_negative_definite(m);
  Outcome o;
  o.positive = cert.negative_definite;
  o.verdict = o.positive ? "negative-definite" : "not-negative-definite";
  Json pivots = Json::array();
  for (const auto& p : cert.pivots) pivots.push_back(to_string(p));
  o.body["pivots"] = std::move(pivots);
  o.body["pivot_order"] = labels_json(cert.permutation, m.points());
  if (cert.witness) {
    Json w = Json::object();
    for (Eigen::Index i = 0; i < cert.witness->size(); ++i)
      w[m.points()[static_cast<std::size_t>(i)]] = to_string((*cert.witness)(i));
    o.body["witness"] = std::move(w);
    o.body["witness_value"] = to_string(cert.witness_value);
  }
  return o;
}

Outcome cmd_hypermetric(const Input& in, int bound, std::uint64_t budget) {
  auto m = metric_from_json(in.doc);
  auto r = certify_hypermetric(m, bound, budget);
  Outcome o;
  o.positive = r.pass;
  o.verdict = r.pass ? "hypermetric" : "not-hypermetric";
  o.body["bound"] = r.bound;
  o.body["max_value"] = to_string(r.max_value);
  Json worst = Json::object();
  for (std::size_t i = 0; i < r.worst.size(); ++i) worst[m.points()[i]] = r.worst[i];
  o.body["worst"] = std::move(worst);
  o.body["vectors"] = r.checked;
  return o;
}

Outcome cmd_embed(const Input& in, const std::string& mode, double tol) {
  Outcome o;
  if (mode == "l1") {
    auto cert = require_median_graph(graph_from_json(in.doc));
    auto e = l1_embed(cert);
    o.verdict = "embedded";
    o.body["mode"] = "l1";
    o.body["dimension"] = e.dimension;
    Json coords = Json::object();
    for (std::size_t v = 0; v < e.points.size(); ++v) {
      std::string bits;
      for (std::size_t i = 0; i < e.dimension; ++i) bits += e.coordinates[v].test(i) ? '1' : '0';
      coords[e.points[v]] = bits;
    }
    o.body["coordinates"] = std::move(coords);
    return o;
  }
  if (mode != "gns") throw InputError("--mode must be l1 or gns");
  auto m = metric_from_json(in.doc);
  auto e = gns_embed(m, tol);
  o.verdict = "embedded";
  o.body["mode"] = "gns";
  o.body["dimension"] = e.coordinates.cols();
  o.body["tolerance"] = e.tolerance;
  o.body["max_error"] = e.max_error;
  Json coords = Json::object();
  for (std::size_t v = 0; v < e.points.size(); ++v)
    coords[e.points[v]] = coordinates_json(e.coordinates.row(static_cast<Eigen::Index>(v)).transpose());
  o.body["coordinates"] = std::move(coords);
  return o;
}

Outcome cmd_helly(const Input& in, std::size_t cap) {
  auto m = metric_from_json(in.doc);
  auto r = check_helly(m, cap);
  Outcome o;
  o.positive = r.holds;
  o.verdict = r.holds ? "helly" : "not-helly";
  o.body["convex_sets"] = r.convex_sets;
  o.body["modular"] = r.modular;
  o.body["agrees_with_modularity"] = r.agrees_with_modularity;
  if (r.witness_points) {
    o.body["witness_points"] =
        labels_json({(*r.witness_points)[0], (*r.witness_points)[1], (*r.witness_points)[2]}, m.points());
    Json family = Json::array();
    for (const auto& s : r.witness_family) family.push_back(as_json(s, m.points()));
    o.body["witness_family"] = std::move(family);
  }
  if (!r.agrees_with_modularity)
    throw ConsistencyError("Helly verdict disagrees with the modular classification");
  return o;
}

Outcome cmd_displace(const Input& in, const std::string& action_path, const std::string& word,
                     double tol) {
  const Json action_doc = read_json_file(action_path);
  Outcome o;
  o.body["word"] = word;
  if (in.doc.contains("walls")) {
    auto w = walls_from_json(in.doc);
    auto a = action_from_json(action_doc, w.points());
    auto [dist, diff] = action_displacement_walls(a, w, word);
    o.verdict = "consistent";
    o.body["model"] = "walls";
    o.body["basepoint"] = w.points()[static_cast<std::size_t>(a.basepoint)];
    o.body["wall_distance"] = dist;
    o.body["halfspace_difference"] = diff;
    return o;
  }
  auto mm = MedianMetric::certify(metric_from_json(in.doc));
  auto a = action_from_json(action_doc, mm.points());
  auto r = action_displacement_metric(a, mm, word, tol);
  o.positive = r.pass;
  o.verdict = r.pass ? "consistent" : "inconsistent";
  o.body["model"] = "metric";
  o.body["basepoint"] = mm.points()[static_cast<std::size_t>(a.basepoint)];
  o.body["displacement"] = to_string(r.displacement);
  o.body["embedded_squared"] = r.embedded;
  o.body["error"] = r.error;
  return o;
}

Outcome cmd_circumcenter(const Input& in, double tol, std::uint64_t seed) {
  auto c = points_from_json(in.doc);
  auto r = circumcenter(c, tol, seed);
  Outcome o;
  o.verdict = "converged";
  o.body["norm"] = to_string(c.norm);
  o.body["center"] = coordinates_json(r.center);
  o.body["radius"] = r.radius;
  o.body["certificate"] = r.certificate;
  o.body["iterations"] = r.iterations;
  o.body["seed"] = r.seed;
  o.body["tolerance"] = tol;
  return o;
}

Outcome cmd_corpus(const std::vector<std::string>& names, std::uint64_t seed,
                   const std::string& dir) {
  std::vector<std::string> specs = names.empty() ? standard_corpus_specs() : names;
  Outcome o;
  o.verdict = "generated";
  o.body["seed"] = seed;
  Json list = Json::array();
  for (const auto& spec : specs) {
    auto inst = generate_instance(spec, seed);
    Json entry = {{"name", inst.name}, {"kind", inst.kind}};
    if (!dir.empty()) {
      std::string file = inst.name;
      std::replace(file.begin(), file.end(), ':', '_');
      auto path = std::filesystem::path(dir) / (file + ".json");
      write_text_file(path.string(), inst.document.dump(2) + "\n");
      entry["file"] = path.string();
    } else {
      entry["document"] = inst.document;
    }
    list.push_back(std::move(entry));
  }
  o.body["instances"] = std::move(list);
  return o;
}

void add_common(CLI::App* sub, Options& opt, bool needs_input = true) {
  if (needs_input) sub->add_option("--in", opt.in, "Input JSON file")->required();
  sub->add_option("--out", opt.out, "Write the report here instead of stdout");
  sub->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--expect", opt.expect, "Expected verdict; exit 1 on mismatch");
  sub->add_flag("--timings", opt.timings, "Include wall-clock timings in the report");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite median geometry toolkit", "medgeo"};
  app.require_subcommand(1);
  Options opt;
  std::string dot, mode = "gns", action, word, dir;
  std::size_t cap = 0;
  int max_dim = 0, bound = 2;
  std::uint64_t budget = kDefaultHypermetricBudget;
  std::uint64_t seed = kDefaultCircumcenterSeed;
  double tol = 1e-9;
  std::vector<std::string> names;

  auto* axioms = app.add_subcommand("axioms", "Check MA1-MA4 on an interval structure");
  add_common(axioms, opt);
  auto* classify_cmd = app.add_subcommand("classify", "Classify a metric as median, modular or neither");
  add_common(classify_cmd, opt);
  auto* certify_graph = app.add_subcommand("certify-graph", "Certify a median graph");
  add_common(certify_graph, opt);
  certify_graph->add_option("--dot", dot, "Write a Graphviz rendering");
  auto* cubulate_cmd = app.add_subcommand("cubulate", "Build the median graph of a wall space");
  add_common(cubulate_cmd, opt);
  cubulate_cmd->add_option("--dot", dot, "Write a Graphviz rendering");
  cubulate_cmd->add_option("--cap", cap, "Maximum number of nontrivial walls");
  auto* fill = app.add_subcommand("fill-cubes", "Fill the cubes of a median graph");
  add_common(fill, opt);
  fill->add_option("--max-dim", max_dim, "Highest cube dimension");
  auto* negdef = app.add_subcommand("certify-negdef", "Decide negative definiteness exactly");
  add_common(negdef, opt);
  auto* hyper = app.add_subcommand("certify-hypermetric", "Check the hypermetric inequalities");
  add_common(hyper, opt);
  hyper->add_option("--bound", bound, "Largest |t_i| enumerated");
  hyper->add_option("--budget", budget, "Maximum number of vectors");
  auto* embed = app.add_subcommand("embed", "Embed into l1 (graphs) or Euclidean space");
  add_common(embed, opt);
  embed->add_option("--mode", mode, "l1 or gns")->check(CLI::IsMember({"l1", "gns"}));
  embed->add_option("--tol", tol, "Tolerance on squared distances");
  auto* helly = app.add_subcommand("helly", "Check Helly's property for convex sets");
  add_common(helly, opt);
  helly->add_option("--cap", cap, "Maximum number of points");
  auto* displace = app.add_subcommand("displace", "Displacement of a group element at the basepoint");
  add_common(displace, opt);
  displace->add_option("--action", action, "Action JSON file")->required();
  displace->add_option("--word", word, "Generator word, e.g. \"g h^-1\"");
  displace->add_option("--tol", tol, "Tolerance for the embedded check");
  auto* circ = app.add_subcommand("circumcenter", "Circumcenter of a Euclidean point set");
  add_common(circ, opt);
  circ->add_option("--tol", tol, "Tolerance");
  circ->add_option("--seed", seed, "Seed for the starting point and shuffles");
  auto* corpus = app.add_subcommand("corpus", "Generate corpus instances");
  add_common(corpus, opt, false);
  corpus->add_option("names", names, "Generator specs, e.g. cube:3 tree:20");
  corpus->add_option("--seed", seed, "Seed for random generators");
  corpus->add_option("--dir", dir, "Write one file per instance into this directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kInputError;
  }

  const auto* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    const auto start = std::chrono::steady_clock::now();
    Input in;
    if (command != "corpus") in = load(opt.in);
    Outcome o;
    if (command == "axioms") o = cmd_axioms(in);
    else if (command == "classify") o = cmd_classify(in);
    else if (command == "certify-graph") o = cmd_certify_graph(in, dot);
    else if (command == "cubulate") o = cmd_cubulate(in, dot, cap ? cap : kDefaultWallCap, err);
    else if (command == "fill-cubes") o = cmd_fill_cubes(in, max_dim);
    else if (command == "certify-negdef") o = cmd_negdef(in);
    else if (command == "certify-hypermetric") o = cmd_hypermetric(in, bound, budget);
    else if (command == "embed") o = cmd_embed(in, mode, tol);
    else if (command == "helly") o = cmd_helly(in, cap ? cap : kDefaultHellyCap);
    else if (command == "displace") o = cmd_displace(in, action, word, tol);
    else if (command == "circumcenter") o = cmd_circumcenter(in, tol, seed);
    else o = cmd_corpus(names, seed, dir);
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);

    Json report;
    report["command"] = command;
    if (command != "corpus") report["input"] = {{"path", in.path}, {"digest", in.digest}};
    report["verdict"] = o.verdict;
    for (auto& [k, v] : o.body.items()) report[k] = v;
    int code = o.positive ? kOk : kNegative;
    if (!opt.expect.empty()) {
      report["expected"] = opt.expect;
      report["matches"] = opt.expect == o.verdict;
      code = opt.expect == o.verdict ? kOk : kNegative;
    }
    if (opt.timings) report["timings"] = {{"seconds", elapsed.count()}};

    std::ostringstream text;
    if (opt.format == "text") flatten(report, "", text);
    else text << report.dump(2) << "\n";
    if (opt.out.empty()) out << text.str();
    else write_text_file(opt.out, text.str());
    return code;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kConsistencyError;
  }
}

}  // namespace medgeo::cli
