#include "caygen/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "caygen/error.hpp"

namespace caygen {

SimpleGraph::SimpleGraph(int num_vertices, std::vector<Edge> edges) {
  if (num_vertices < 0) throw InvalidArgument("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(num_vertices));
  for (Edge& e : edges) {
    if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    e = Edge::make(e.u, e.v);
    if (e.u < 0 || e.v >= num_vertices) {
      throw InvalidArgument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} out of range");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (const auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw InvalidArgument("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  }
  for (const Edge& e : edges) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  edges_ = std::move(edges);
}

bool SimpleGraph::has_edge(int a, int b) const {
  if (a < 0 || b < 0 || a >= num_vertices() || b >= num_vertices()) return false;
  const auto& list = adjacency_[static_cast<std::size_t>(a)];
  return std::binary_search(list.begin(), list.end(), b);
}

int SimpleGraph::edge_index(int a, int b) const {
  if (a == b) return -1;
  const Edge e = Edge::make(a, b);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

int SimpleGraph::min_degree() const {
  int best = 0;
  for (int v = 0; v < num_vertices(); ++v) best = v == 0 ? degree(v) : std::min(best, degree(v));
  return best;
}

std::vector<int> SimpleGraph::degree_sequence() const {
  std::vector<int> out;
  out.reserve(adjacency_.size());
  for (const auto& list : adjacency_) out.push_back(static_cast<int>(list.size()));
  std::sort(out.begin(), out.end());
  return out;
}

VertexMapping::VertexMapping(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)]) {
      throw InvalidArgument("vertex mapping is not a bijection");
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

VertexMapping VertexMapping::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  return VertexMapping(std::move(images), Trusted{});
}

bool VertexMapping::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

VertexMapping compose(const VertexMapping& a, const VertexMapping& b) {
  if (a.size() != b.size()) throw InvalidArgument("vertex mapping size mismatch");
  std::vector<int> out(b.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  return VertexMapping(std::move(out), VertexMapping::Trusted{});
}

VertexMapping inverse(const VertexMapping& a) {
  std::vector<int> out(a.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[static_cast<std::size_t>(a.images_[i])] = static_cast<int>(i);
  return VertexMapping(std::move(out), VertexMapping::Trusted{});
}

LineGraph line_graph(const SimpleGraph& g) {
  LineGraph out;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) out.edge_index.emplace(edges[i], static_cast<int>(i));
  std::vector<Edge> line_edges;
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto nbrs = g.neighbors(v);
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        line_edges.push_back(Edge::make(g.edge_index(v, nbrs[a]), g.edge_index(v, nbrs[b])));
      }
    }
  }
  // Two distinct edges of a simple graph share at most one endpoint, so no duplicates arise.
  out.graph = SimpleGraph(g.num_edges(), std::move(line_edges));
  return out;
}

bool is_connected(const SimpleGraph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_isomorphism(const SimpleGraph& g, const SimpleGraph& h, const VertexMapping& f) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
  if (f.size() != g.num_vertices()) return false;
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return h.has_edge(f(e.u), f(e.v)); });
}

bool is_automorphism(const SimpleGraph& g, const VertexMapping& f) { return is_isomorphism(g, g, f); }

std::optional<std::vector<int>> is_bipartite(const SimpleGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::deque<int> queue;
  for (int start = 0; start < n; ++start) {
    if (color[static_cast<std::size_t>(start)] != -1) continue;
    color[static_cast<std::size_t>(start)] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        auto& cw = color[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - color[static_cast<std::size_t>(v)];
          queue.push_back(w);
        } else if (cw == color[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

namespace {

// Unit-capacity residual network on the split digraph: vertex v becomes
// v_in = 2v and v_out = 2v + 1 joined by an arc of capacity 1.
class SplitNetwork {
 public:
  explicit SplitNetwork(const SimpleGraph& g) : head_(static_cast<std::size_t>(2 * g.num_vertices()), -1) {
    for (int v = 0; v < g.num_vertices(); ++v) add_arc(2 * v, 2 * v + 1);
    for (const Edge& e : g.edges()) {
      add_arc(2 * e.u + 1, 2 * e.v);
      add_arc(2 * e.v + 1, 2 * e.u);
    }
  }

  int max_flow(int source, int sink, int limit) {
    std::fill(cap_.begin(), cap_.end(), 0);
    for (std::size_t a = 0; a < cap_.size(); a += 2) cap_[a] = 1;
    int flow = 0;
    std::vector<int> via(head_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> queue{source};
      via[static_cast<std::size_t>(source)] = -2;
      while (!queue.empty() && via[static_cast<std::size_t>(sink)] == -1) {
        const int x = queue.front();
        queue.pop_front();
        for (int a = head_[static_cast<std::size_t>(x)]; a != -1; a = next_[static_cast<std::size_t>(a)]) {
          const int y = to_[static_cast<std::size_t>(a)];
          if (cap_[static_cast<std::size_t>(a)] > 0 && via[static_cast<std::size_t>(y)] == -1) {
            via[static_cast<std::size_t>(y)] = a;
            queue.push_back(y);
          }
        }
      }
      if (via[static_cast<std::size_t>(sink)] == -1) break;
      for (int y = sink; y != source;) {
        const int a = via[static_cast<std::size_t>(y)];
        --cap_[static_cast<std::size_t>(a)];
        ++cap_[static_cast<std::size_t>(a ^ 1)];
        y = to_[static_cast<std::size_t>(a ^ 1)];
      }
      ++flow;
    }
    return flow;
  }

 private:
  void add_arc(int from, int to) {
    push(from, to);
    push(to, from);
  }
  void push(int from, int to) {
    to_.push_back(to);
    next_.push_back(head_[static_cast<std::size_t>(from)]);
    head_[static_cast<std::size_t>(from)] = static_cast<int>(to_.size()) - 1;
    cap_.push_back(0);
  }

  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<int> next_;
  std::vector<int> cap_;
};

}  // namespace

int local_vertex_connectivity(const SimpleGraph& g, int s, int t, int limit) {
  if (s == t || g.has_edge(s, t)) throw InvalidArgument("local connectivity needs distinct non-adjacent vertices");
  SplitNetwork net(g);
  return net.max_flow(2 * s + 1, 2 * t, limit);
}

int vertex_connectivity(const SimpleGraph& g) {
  const int n = g.num_vertices();
  if (n <= 1 || !is_connected(g)) return 0;
  if (g.num_edges() == n * (n - 1) / 2) return n - 1;
  // Even's scheme: some vertex among the first kappa+1 lies outside a minimum
  // separator, so scanning pairs (i, j > i) for i <= current bound suffices.
  SplitNetwork net(g);
  int best = g.min_degree();
  for (int i = 0; i <= best && i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) continue;
      best = std::min(best, net.max_flow(2 * i + 1, 2 * j, best));
    }
  }
  return best;
}

VertexMapping induced_edge_action(const SimpleGraph& g, const VertexMapping& automorphism) {
  const auto edges = g.edges();
  std::vector<int> images(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int j = g.edge_index(automorphism(edges[i].u), automorphism(edges[i].v));
    if (j < 0) throw InvalidArgument("mapping does not preserve the edge set");
    images[i] = j;
  }
  return VertexMapping(std::move(images));
}

VertexMapping whitney_lift(const SimpleGraph& t, const VertexMapping& line_automorphism) {
  const int n = t.num_vertices();
  if (n < 5 || !is_connected(t)) {
    throw PreconditionError("line-graph lifting requires a connected graph on at least 5 vertices");
  }
  if (line_automorphism.size() != t.num_edges()) throw InvalidArgument("line-graph mapping has the wrong size");
  const auto edges = t.edges();
  std::vector<int> images(static_cast<std::size_t>(n), -1);

  // A vertex of degree >= 2 is the unique common endpoint of the images of its edge-star.
  for (int v = 0; v < n; ++v) {
    if (t.degree(v) < 2) continue;
    std::vector<int> common;
    bool first = true;
    for (int w : t.neighbors(v)) {
      const Edge img = edges[static_cast<std::size_t>(line_automorphism(t.edge_index(v, w)))];
      std::vector<int> ends{img.u, img.v};
      if (first) {
        common = ends;
        first = false;
      } else {
        std::vector<int> kept;
        std::set_intersection(common.begin(), common.end(), ends.begin(), ends.end(), std::back_inserter(kept));
        common = std::move(kept);
      }
    }
    // Two edges sharing a vertex always share exactly one; a triangle image has none.
    if (common.size() != 1) {
      throw InconsistencyError("edge-star of vertex " + std::to_string(v) + " does not map onto an edge-star");
    }
    images[static_cast<std::size_t>(v)] = common.front();
  }
  // A leaf is recovered as the far endpoint of the image of its only edge.
  for (int v = 0; v < n; ++v) {
    if (t.degree(v) != 1) continue;
    const int u = t.neighbors(v).front();
    const Edge img = edges[static_cast<std::size_t>(line_automorphism(t.edge_index(v, u)))];
    const int hu = images[static_cast<std::size_t>(u)];
    if (hu == img.u) {
      images[static_cast<std::size_t>(v)] = img.v;
    } else if (hu == img.v) {
      images[static_cast<std::size_t>(v)] = img.u;
    } else {
      throw InconsistencyError("leaf edge image is not incident to the image of its anchor");
    }
  }
  VertexMapping lift = [&] {
    try {
      return VertexMapping(std::move(images));
    } catch (const InvalidArgument&) {
      throw InconsistencyError("reconstructed vertex map is not a bijection");
    }
  }();
  if (!is_automorphism(t, lift) || induced_edge_action(t, lift) != line_automorphism) {
    throw InconsistencyError("reconstructed vertex map does not induce the given line-graph automorphism");
  }
  return lift;
}

}  // namespace caygen
