#include "speclap/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace speclap {

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(s)));
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n < 0 ? 0 : n), 0) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("Graph: vertex count must be in [0, 64], got " + std::to_string(n));
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("Graph: edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an endpoint outside [0, " + std::to_string(n) + ")");
    if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
    if (g.adjacent(u, v))
      throw std::invalid_argument("Graph: duplicate edge (" + std::to_string(std::min(u, v)) + "," +
                                  std::to_string(std::max(u, v)) + ")");
    g.rows_[static_cast<std::size_t>(u)] |= vertex_bit(v);
    g.rows_[static_cast<std::size_t>(v)] |= vertex_bit(u);
    ++g.m_;
  }
  return g;
}

Graph Graph::from_adjacency_rows(std::vector<VertexSet> rows) {
  Graph g(static_cast<int>(rows.size()));
  const int n = g.n_;
  const VertexSet all = g.all_vertices();
  int degree_sum = 0;
  for (int u = 0; u < n; ++u) {
    const VertexSet r = rows[static_cast<std::size_t>(u)];
    if (r & ~all) throw std::invalid_argument("Graph: adjacency row references a missing vertex");
    if (r & vertex_bit(u)) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
    for (int v : members(r))
      if (!((rows[static_cast<std::size_t>(v)] >> u) & 1U))
        throw std::invalid_argument("Graph: adjacency rows are not symmetric");
    degree_sum += std::popcount(r);
  }
  g.rows_ = std::move(rows);
  g.m_ = degree_sum / 2;
  return g;
}

VertexSet Graph::all_vertices() const {
  return n_ == 64 ? ~VertexSet{0} : vertex_bit(n_) - 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : members(rows_[static_cast<std::size_t>(u)] & ~((VertexSet{2} << u) - 1)))
      out.emplace_back(u, v);
  return out;
}

namespace {

VertexSet reach(const Graph& g, int start) {
  VertexSet seen = vertex_bit(start);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (int v : members(frontier)) next |= g.neighbors(v);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

int eccentricity(const Graph& g, int start) {
  VertexSet seen = vertex_bit(start);
  VertexSet frontier = seen;
  int depth = 0;
  while (true) {
    VertexSet next = 0;
    for (int v : members(frontier)) next |= g.neighbors(v);
    next &= ~seen;
    if (!next) return depth;
    seen |= next;
    frontier = next;
    ++depth;
  }
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return reach(g, 0) == g.all_vertices();
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet remaining = g.all_vertices();
  while (remaining) {
    const VertexSet comp = reach(g, std::countr_zero(remaining));
    out.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

std::optional<BipartiteSplit> is_bipartite(const Graph& g) {
  BipartiteSplit split;
  VertexSet remaining = g.all_vertices();
  while (remaining) {
    const int root = std::countr_zero(remaining);
    VertexSet side_a = vertex_bit(root);
    VertexSet side_b = 0;
    VertexSet frontier = side_a;
    bool frontier_is_a = true;
    while (frontier) {
      VertexSet next = 0;
      for (int v : members(frontier)) next |= g.neighbors(v);
      VertexSet& same = frontier_is_a ? side_a : side_b;
      VertexSet& other = frontier_is_a ? side_b : side_a;
      if (next & same) return std::nullopt;
      next &= ~other;
      other |= next;
      frontier = next;
      frontier_is_a = !frontier_is_a;
    }
    split.part1 |= side_a;
    split.part2 |= side_b;
    remaining &= ~(side_a | side_b);
  }
  return split;
}

int diameter(const Graph& g) {
  if (!is_connected(g)) return kInfiniteDiameter;
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, eccentricity(g, v));
  return d;
}

VertexSet common_neighbors(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("common_neighbors: u and v must differ");
  return g.neighbors(u) & g.neighbors(v);
}

std::vector<DuplicateClass> duplicate_classes(const Graph& g) {
  std::vector<DuplicateClass> out;

  std::map<VertexSet, VertexSet> by_open;
  std::map<VertexSet, VertexSet> by_closed;
  for (int v = 0; v < g.order(); ++v) {
    by_open[g.neighbors(v)] |= vertex_bit(v);
    by_closed[g.neighbors(v) | vertex_bit(v)] |= vertex_bit(v);
  }

  for (const auto& [nbhd, cls] : by_open) {
    if (set_size(cls) < 2 || nbhd == 0) continue;
    out.push_back({members(cls), members(nbhd), DuplicateKind::independent});
  }
  for (const auto& [closed, cls] : by_closed) {
    if (set_size(cls) < 2) continue;
    const VertexSet outside = closed & ~cls;
    if (!outside) continue;
    out.push_back({members(cls), members(outside), DuplicateKind::clique});
  }

  std::stable_sort(out.begin(), out.end(), [](const DuplicateClass& a, const DuplicateClass& b) {
    if (a.kind != b.kind) return a.kind == DuplicateKind::independent;
    return a.vertices.front() < b.vertices.front();
  });
  return out;
}

std::optional<std::vector<int>> is_complete_multipartite(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  // Parts are the classes of "non-adjacent or equal", which must be an
  // equivalence relation whose classes are independent sets.
  std::vector<int> sizes;
  VertexSet assigned = 0;
  const VertexSet all = g.all_vertices();
  for (int v = 0; v < n; ++v) {
    if (assigned & vertex_bit(v)) continue;
    const VertexSet part = all & ~g.neighbors(v);
    for (int w : members(part))
      if ((all & ~g.neighbors(w)) != part) return std::nullopt;
    assigned |= part;
    sizes.push_back(set_size(part));
  }
  if (sizes.size() < 2) return std::nullopt;
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

Graph complement(const Graph& g) {
  std::vector<VertexSet> rows(static_cast<std::size_t>(g.order()));
  const VertexSet all = g.all_vertices();
  for (int v = 0; v < g.order(); ++v)
    rows[static_cast<std::size_t>(v)] = all & ~g.neighbors(v) & ~vertex_bit(v);
  return Graph::from_adjacency_rows(std::move(rows));
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  const std::vector<int> kept = members(keep & g.all_vertices());
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) index[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);
  std::vector<VertexSet> rows(kept.size(), 0);
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (int w : members(g.neighbors(kept[i]) & keep))
      rows[i] |= vertex_bit(index[static_cast<std::size_t>(w)]);
  return Graph::from_adjacency_rows(std::move(rows));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<VertexSet> rows(perm.size(), 0);
  for (int u = 0; u < g.order(); ++u)
    for (int v : members(g.neighbors(u)))
      rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] |= vertex_bit(perm[static_cast<std::size_t>(v)]);
  return Graph::from_adjacency_rows(std::move(rows));
}

int count_isolated(const Graph& g) {
  int c = 0;
  for (int v = 0; v < g.order(); ++v) c += g.degree(v) == 0;
  return c;
}

}  // namespace speclap
