#pragma once

#include <optional>
#include <string>
#include <vector>

#include "speclap/graph.hpp"
#include "speclap/linalg.hpp"
#include "speclap/report.hpp"

namespace speclap {

struct VerifyOptions {
  double cluster_tol = kDefaultClusterTol;
  /// thm41 only: build the order-8t construction instead of reading a graph.
  std::optional<int> t;
};

/// lemma22, eq1, three-ev, four-ev, lemma23, lemma24, thm21, thm41, cor21,
/// cor20.
const std::vector<std::string>& suite_names();

/// Runs one named suite. `g` may be empty only for thm41 with opts.t set.
/// Throws std::invalid_argument for an unknown suite or a missing graph.
CheckReport run_suite(const std::string& name, const std::optional<Graph>& g, const VerifyOptions& opts = {});

/// True for P4 and for any graph of the shape produced by thm41_graph: a
/// leaf u0 whose neighbour v0 is adjacent to exactly one side of the
/// remaining bipartite graph, which must be the incidence graph of a
/// symmetric (4t-1, 2t, t) design.
bool has_thm41_structure(const Graph& g);

}  // namespace speclap
