#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "speclap/graph.hpp"

namespace speclap {

/// Standard graph6 encoding (no ">>graph6<<" header, no newline).
std::string to_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" header and trailing whitespace.
/// Throws std::invalid_argument on malformed input.
Graph from_graph6(std::string_view text);

/// {"n": int, "edges": [[u, v], ...]} with u < v, edges sorted.
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Reads a graph from text: JSON when the first non-blank character is '{',
/// otherwise the first graph6 line.
Graph parse_graph(std::string_view text);

}  // namespace speclap
