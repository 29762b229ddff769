#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace caygen {

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  static Edge make(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices {0..num_vertices-1}.
///
/// Immutable after construction. Edges are kept sorted, and each adjacency
/// list is sorted ascending.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Throws InvalidArgument on self-loops, duplicates or out-of-range ids.
  SimpleGraph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const noexcept { return static_cast<int>(adjacency_.size()); }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const int> neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(int a, int b) const;
  /// Position of the edge in edges(), or -1.
  int edge_index(int a, int b) const;
  int min_degree() const;
  std::vector<int> degree_sequence() const;  // sorted ascending

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// A bijection on vertex ids. compose(a, b) applies b first.
class VertexMapping {
 public:
  VertexMapping() = default;
  /// Throws InvalidArgument when `images` is not a bijection.
  explicit VertexMapping(std::vector<int> images);
  static VertexMapping identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[static_cast<std::size_t>(v)]; }
  std::span<const int> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  friend VertexMapping compose(const VertexMapping& a, const VertexMapping& b);
  friend VertexMapping inverse(const VertexMapping& a);

  friend bool operator==(const VertexMapping&, const VertexMapping&) = default;
  friend auto operator<=>(const VertexMapping&, const VertexMapping&) = default;

 private:
  struct Trusted {};
  VertexMapping(std::vector<int> images, Trusted) : images_(std::move(images)) {}

  std::vector<int> images_;
};

VertexMapping compose(const VertexMapping& a, const VertexMapping& b);
VertexMapping inverse(const VertexMapping& a);

struct LineGraph {
  SimpleGraph graph;
  /// Line-vertex id for each edge of the source graph. Ids follow the order of edges().
  std::map<Edge, int> edge_index;
};

/// L(g): one vertex per edge of g, adjacent iff the edges share an endpoint.
LineGraph line_graph(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);

/// Edge preservation check for f: g -> h (bijection, equal edge counts, all edges mapped onto edges).
bool is_isomorphism(const SimpleGraph& g, const SimpleGraph& h, const VertexMapping& f);
bool is_automorphism(const SimpleGraph& g, const VertexMapping& f);

/// Two-coloring (0/1 per vertex) found by BFS, or nullopt when an odd cycle exists.
std::optional<std::vector<int>> is_bipartite(const SimpleGraph& g);

/// Minimum number of vertices whose removal disconnects g.
/// Complete graphs give n-1, disconnected graphs and K_1 give 0.
int vertex_connectivity(const SimpleGraph& g);

/// Maximum number of internally vertex-disjoint s-t paths for non-adjacent s, t,
/// stopping early once `limit` paths are found.
int local_vertex_connectivity(const SimpleGraph& g, int s, int t, int limit);

/// The action of a vertex automorphism on the edge set, as a mapping on edge positions.
VertexMapping induced_edge_action(const SimpleGraph& g, const VertexMapping& automorphism);

/// The unique automorphism of t whose action on edges is `line_automorphism`
/// (a mapping on line-graph vertex ids, i.e. positions in t.edges()).
///
/// Requires t connected with at least 5 vertices (PreconditionError otherwise).
/// Throws InconsistencyError when no such automorphism exists.
VertexMapping whitney_lift(const SimpleGraph& t, const VertexMapping& line_automorphism);

}  // namespace caygen
