#include "speclap/graph_io.hpp"

#include <stdexcept>

namespace speclap {

namespace {

constexpr int kBias = 63;

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
    out.push_back(static_cast<char>((n & 0x3f) + kBias));
  }

  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  for (char c : text)
    if (c < kBias || c > 126) throw std::invalid_argument("graph6: character out of range");

  int n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') throw std::invalid_argument("graph6: unsupported vertex count header");
    n = ((text[1] - kBias) << 12) | ((text[2] - kBias) << 6) | (text[3] - kBias);
    pos = 4;
  }
  if (n > Graph::kMaxVertices) throw std::invalid_argument("graph6: more than 64 vertices");

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected)
    throw std::invalid_argument("graph6: expected " + std::to_string(expected) + " data bytes, got " +
                                std::to_string(text.size() - pos));

  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[static_cast<std::size_t>(i)] |= vertex_bit(j);
        rows[static_cast<std::size_t>(j)] |= vertex_bit(i);
      }
    }
  }
  // Padding bits must be zero.
  if (k % 6 != 0) {
    const int last = text.back() - kBias;
    if (last & ((1 << (6 - k % 6)) - 1)) throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return Graph::from_adjacency_rows(std::move(rows));
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON: expected {\"n\": int, \"edges\": [[u, v], ...]}");
  const int n = j.at("n").get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph JSON: each edge must be [u, v]");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph::from_edge_list(n, edges);
}

Graph parse_graph(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) throw std::invalid_argument("no graph in input");
  if (body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(std::string("graph JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  const std::size_t eol = body.find_first_of("\r\n");
  return from_graph6(body.substr(0, eol));
}

}  // namespace speclap
