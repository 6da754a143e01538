#pragma once

#include "medgeo/io.hpp"
#include "medgeo/median_algebra.hpp"
#include "medgeo/median_graph.hpp"
#include "medgeo/wall_space.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace medgeo {

SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
/// Vertices are bit strings of length k.
SimpleGraph hypercube_graph(int k);
/// P_m x P_n with vertices "(i,j)".
SimpleGraph grid_graph(int m, int n);
/// Uniform random attachment tree; vertex i > 0 hangs off a random earlier one.
SimpleGraph random_tree(int n, std::uint64_t seed);
SimpleGraph star_graph(int leaves);
SimpleGraph complete_bipartite(int a, int b);

/// Three points x, y, z whose intervals satisfy every axiom but symmetry.
IntervalStructure asymmetric_interval_fixture();

/// Random nontrivial walls on `points` points, resampled until every pair is
/// separated.
WallSpace random_wall_space(int points, int walls, std::uint64_t seed);

struct CorpusInstance {
  std::string name;
  /// "graph", "metric", "intervals" or "walls".
  std::string kind;
  /// Input document plus an "expected" object describing the verdict.
  Json document;
};

/// Generator specs: path:N, cycle:N, cube:K, grid:MxN, tree:N, star:N,
/// k23, asymmetric-interval, walls:PxW. Unknown names are InputErrors. Seeds feed the
/// random generators (tree, walls).
CorpusInstance generate_instance(const std::string& spec, std::uint64_t seed);

/// Instances used by the regression and acceptance suites.
std::vector<std::string> standard_corpus_specs();

}  // namespace medgeo
