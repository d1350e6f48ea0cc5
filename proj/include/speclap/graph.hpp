#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace speclap {

/// Bitset over vertex labels 0..63.
using VertexSet = std::uint64_t;

inline constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }
inline int set_size(VertexSet s) { return std::popcount(s); }
std::vector<int> members(VertexSet s);

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1, n <= 64. Immutable once built.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  /// Edgeless graph on n vertices.
  explicit Graph(int n = 0);

  /// Throws std::invalid_argument on out-of-range endpoints, self-loops, or
  /// a pair listed twice (in either orientation).
  static Graph from_edge_list(int n, std::span<const Edge> edges);

  /// Rows must be symmetric with a zero diagonal.
  static Graph from_adjacency_rows(std::vector<VertexSet> rows);

  int order() const { return n_; }
  int edge_count() const { return m_; }
  int degree(int v) const { return std::popcount(rows_[static_cast<std::size_t>(v)]); }
  bool adjacent(int u, int v) const { return (rows_[static_cast<std::size_t>(u)] >> v) & 1U; }
  VertexSet neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  VertexSet all_vertices() const;
  const std::vector<VertexSet>& adjacency_rows() const { return rows_; }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> rows_;
};

struct BipartiteSplit {
  VertexSet part1 = 0;
  VertexSet part2 = 0;
  int n1() const { return set_size(part1); }
  int n2() const { return set_size(part2); }
  friend bool operator==(const BipartiteSplit&, const BipartiteSplit&) = default;
};

enum class DuplicateKind { independent, clique };

/// Vertices X (|X| >= 2) sharing the same neighbours outside X.
struct DuplicateClass {
  std::vector<int> vertices;
  std::vector<int> shared_neighbors;
  DuplicateKind kind = DuplicateKind::independent;
  friend bool operator==(const DuplicateClass&, const DuplicateClass&) = default;
};

inline constexpr int kInfiniteDiameter = std::numeric_limits<int>::max();

bool is_connected(const Graph& g);

/// Vertex sets of the connected components, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// Two-colouring by BFS; in each component the smallest vertex lands in part1.
std::optional<BipartiteSplit> is_bipartite(const Graph& g);

/// Largest BFS eccentricity; kInfiniteDiameter when disconnected.
int diameter(const Graph& g);

/// Throws std::invalid_argument when u == v.
VertexSet common_neighbors(const Graph& g, int u, int v);

/// Maximal classes of size >= 2: identical open neighbourhoods (independent)
/// or identical closed neighbourhoods with at least one outside neighbour
/// (clique). Classes are sorted by smallest vertex, independent first.
std::vector<DuplicateClass> duplicate_classes(const Graph& g);

/// Sorted part sizes when the complement is a disjoint union of cliques.
/// Complete graphs report all-ones. Edgeless graphs on >= 2 vertices are not
/// complete multipartite (single part).
std::optional<std::vector<int>> is_complete_multipartite(const Graph& g);

Graph complement(const Graph& g);

/// Induced subgraph relabelled 0..k-1 in increasing original order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

/// Graph with vertices relabelled: vertex v becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

int count_isolated(const Graph& g);

}  // namespace speclap
