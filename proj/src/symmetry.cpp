#include "caygen/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "caygen/error.hpp"

namespace caygen {

namespace {

struct ImageHash {
  std::size_t operator()(std::span<const int> images) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : images) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
  std::size_t operator()(const std::vector<int>& images) const noexcept { return (*this)(std::span<const int>(images)); }
};

using ImageSet = std::unordered_set<std::vector<int>, ImageHash>;

std::vector<std::vector<int>> closure(int degree, std::span<const VertexMapping> generators, std::uint64_t limit) {
  ImageSet seen;
  std::vector<std::vector<int>> out;
  const auto id = VertexMapping::identity(degree);
  std::vector<int> start(id.images().begin(), id.images().end());
  seen.insert(start);
  out.push_back(std::move(start));
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const VertexMapping& gen : generators) {
      std::vector<int> next(static_cast<std::size_t>(degree));
      for (int i = 0; i < degree; ++i) next[static_cast<std::size_t>(i)] = gen(out[head][static_cast<std::size_t>(i)]);
      if (seen.insert(next).second) {
        if (out.size() >= limit) throw CapacityError("group closure exceeds " + std::to_string(limit) + " elements");
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<std::vector<int>> groups() {
    std::vector<std::vector<int>> by_root(parent_.size());
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i) by_root[static_cast<std::size_t>(find(i))].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& g : by_root) {
      if (!g.empty()) out.push_back(std::move(g));
    }
    return out;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

struct PermutationGroup::Cache {
  std::once_flag once;
  std::vector<VertexMapping> elements;
};

PermutationGroup::PermutationGroup(int degree, std::vector<VertexMapping> generators, std::uint64_t order)
    : degree_(degree), generators_(std::move(generators)), order_(order), cache_(std::make_shared<Cache>()) {
  if (degree < 0) throw InvalidArgument("negative group degree");
  if (order == 0) throw InvalidArgument("group order must be positive");
  for (const auto& g : generators_) {
    if (g.size() != degree) throw InvalidArgument("generator degree mismatch");
  }
}

PermutationGroup PermutationGroup::generated_by(int degree, std::vector<VertexMapping> generators) {
  const auto all = closure(degree, generators, kMaxElements);
  PermutationGroup grp(degree, std::move(generators), all.size());
  std::call_once(grp.cache_->once, [&] {
    for (const auto& images : all) grp.cache_->elements.emplace_back(images);
    std::sort(grp.cache_->elements.begin(), grp.cache_->elements.end());
  });
  return grp;
}

PermutationGroup PermutationGroup::from_elements(int degree, std::vector<VertexMapping> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  ImageSet wanted;
  for (const auto& e : elements) wanted.emplace(e.images().begin(), e.images().end());
  // Pick generators greedily; the closure of the picks must reproduce the list exactly.
  std::vector<VertexMapping> gens;
  ImageSet reached;
  {
    const auto id = VertexMapping::identity(degree);
    reached.emplace(id.images().begin(), id.images().end());
  }
  for (const auto& e : elements) {
    if (reached.count(std::vector<int>(e.images().begin(), e.images().end()))) continue;
    gens.push_back(e);
    reached.clear();
    for (auto& images : closure(degree, gens, wanted.size() + 1)) reached.insert(std::move(images));
  }
  if (reached != wanted) throw InvalidArgument("element list is not closed under composition");
  PermutationGroup grp(degree, std::move(gens), elements.size());
  std::call_once(grp.cache_->once, [&] { grp.cache_->elements = std::move(elements); });
  return grp;
}

std::span<const VertexMapping> PermutationGroup::elements() const {
  std::call_once(cache_->once, [this] {
    if (order_ > kMaxElements) {
      throw CapacityError("group of order " + std::to_string(order_) + " is too large to enumerate");
    }
    auto all = closure(degree_, generators_, kMaxElements);
    if (all.size() != order_) {
      throw InconsistencyError("closure has " + std::to_string(all.size()) + " elements, expected order " +
                               std::to_string(order_));
    }
    std::vector<VertexMapping> out;
    out.reserve(all.size());
    for (auto& images : all) out.emplace_back(std::move(images));
    std::sort(out.begin(), out.end());
    cache_->elements = std::move(out);
  });
  return cache_->elements;
}

bool PermutationGroup::contains(const VertexMapping& g) const {
  const auto all = elements();
  return std::binary_search(all.begin(), all.end(), g);
}

PermutationGroup PermutationGroup::pointwise_stabilizer(std::span<const int> points) const {
  std::vector<VertexMapping> kept;
  for (const auto& e : elements()) {
    if (std::all_of(points.begin(), points.end(), [&](int p) { return e(p) == p; })) kept.push_back(e);
  }
  return from_elements(degree_, std::move(kept));
}

std::vector<std::vector<int>> PermutationGroup::orbits() const {
  UnionFind uf(degree_);
  for (const auto& g : generators_) {
    for (int v = 0; v < degree_; ++v) uf.unite(v, g(v));
  }
  return uf.groups();
}

// ---------------------------------------------------------------------------
// Partition refinement search

namespace {

using Cells = std::vector<std::vector<int>>;

// Equitable refinement. Every decision depends only on cell positions and
// neighbour counts, never on vertex ids, so isomorphic inputs refine to
// partitions that correspond cell by cell.
void refine(const SimpleGraph& g, Cells& cells) {
  const int n = g.num_vertices();
  std::vector<int> cell_of(static_cast<std::size_t>(n));
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  auto index_cells = [&] {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (int v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
  };
  index_cells();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < cells.size() && cells.size() < static_cast<std::size_t>(n); ++c) {
      for (int v : cells[c]) {
        for (int w : g.neighbors(v)) ++count[static_cast<std::size_t>(w)];
      }
      bool splits = false;
      for (const auto& cell : cells) {
        if (cell.size() < 2) continue;
        const int first = count[static_cast<std::size_t>(cell.front())];
        if (std::any_of(cell.begin(), cell.end(), [&](int v) { return count[static_cast<std::size_t>(v)] != first; })) {
          splits = true;
          break;
        }
      }
      if (splits) {
        Cells next;
        next.reserve(cells.size() + 4);
        for (auto& cell : cells) {
          if (cell.size() < 2) {
            next.push_back(std::move(cell));
            continue;
          }
          std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) {
            return count[static_cast<std::size_t>(a)] < count[static_cast<std::size_t>(b)];
          });
          std::size_t start = 0;
          for (std::size_t i = 1; i <= cell.size(); ++i) {
            if (i == cell.size() ||
                count[static_cast<std::size_t>(cell[i])] != count[static_cast<std::size_t>(cell[start])]) {
              std::vector<int> part(cell.begin() + static_cast<std::ptrdiff_t>(start),
                                    cell.begin() + static_cast<std::ptrdiff_t>(i));
              std::sort(part.begin(), part.end());
              next.push_back(std::move(part));
              start = i;
            }
          }
        }
        cells = std::move(next);
        index_cells();
        changed = true;
      }
      std::fill(count.begin(), count.end(), 0);
    }
  }
}

// Label-free fingerprint of an equitable partition: cell sizes plus, for one
// representative per cell, the sorted cells of its neighbours.
std::uint64_t fingerprint(const SimpleGraph& g, const Cells& cells) {
  std::vector<int> cell_of(static_cast<std::size_t>(g.num_vertices()));
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (int v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  }
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) { h = (h ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2))) * 1099511628211ULL; };
  std::vector<int> around;
  for (const auto& cell : cells) {
    mix(cell.size());
    around.clear();
    for (int w : g.neighbors(cell.front())) around.push_back(cell_of[static_cast<std::size_t>(w)]);
    std::sort(around.begin(), around.end());
    for (int c : around) mix(static_cast<std::uint64_t>(c) + 1);
    mix(0xffff);
  }
  return h;
}

int first_nonsingleton(const Cells& cells) {
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].size() > 1) return static_cast<int>(c);
  }
  return -1;
}

Cells individualize(const Cells& cells, int cell, int v) {
  Cells out;
  out.reserve(cells.size() + 1);
  for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
    if (c != cell) {
      out.push_back(cells[static_cast<std::size_t>(c)]);
      continue;
    }
    out.push_back({v});
    std::vector<int> rest;
    for (int x : cells[static_cast<std::size_t>(c)]) {
      if (x != v) rest.push_back(x);
    }
    out.push_back(std::move(rest));
  }
  return out;
}

// The leftmost path of the search tree for one graph: at each level the
// smallest vertex of the first non-singleton cell is individualized.
struct LeftPath {
  std::vector<Cells> nodes;
  std::vector<std::uint64_t> prints;
  std::vector<int> target_cell;
  std::vector<int> base;
  std::vector<int> leaf_labels;

  int depth() const { return static_cast<int>(base.size()); }
};

LeftPath left_path(const SimpleGraph& g, Cells root) {
  LeftPath path;
  refine(g, root);
  path.nodes.push_back(std::move(root));
  path.prints.push_back(fingerprint(g, path.nodes.back()));
  for (int c = first_nonsingleton(path.nodes.back()); c >= 0; c = first_nonsingleton(path.nodes.back())) {
    const int v = path.nodes.back()[static_cast<std::size_t>(c)].front();
    path.base.push_back(v);
    path.target_cell.push_back(c);
    Cells next = individualize(path.nodes.back(), c, v);
    refine(g, next);
    path.prints.push_back(fingerprint(g, next));
    path.nodes.push_back(std::move(next));
  }
  for (const auto& cell : path.nodes.back()) path.leaf_labels.push_back(cell.front());
  return path;
}

// Depth-first search below `node` (at `level` of the reference path) in graph
// `h` for a leaf whose labelling, matched against the reference leaf, is an
// isomorphism g -> h.
std::optional<VertexMapping> match_below(const SimpleGraph& g, const SimpleGraph& h, const LeftPath& ref,
                                         const Cells& node, int level) {
  if (fingerprint(h, node) != ref.prints[static_cast<std::size_t>(level)]) return std::nullopt;
  if (level == ref.depth()) {
    if (node.size() != ref.leaf_labels.size()) return std::nullopt;
    std::vector<int> images(ref.leaf_labels.size());
    for (std::size_t i = 0; i < node.size(); ++i) {
      images[static_cast<std::size_t>(ref.leaf_labels[i])] = node[i].front();
    }
    VertexMapping candidate(std::move(images));
    if (is_isomorphism(g, h, candidate)) return candidate;
    return std::nullopt;
  }
  const int c = ref.target_cell[static_cast<std::size_t>(level)];
  if (first_nonsingleton(node) != c) return std::nullopt;
  for (int x : node[static_cast<std::size_t>(c)]) {
    Cells child = individualize(node, c, x);
    refine(h, child);
    if (auto found = match_below(g, h, ref, child, level + 1)) return found;
  }
  return std::nullopt;
}

std::vector<int> orbit_of(int v, int degree, std::span<const VertexMapping> gens) {
  std::vector<char> seen(static_cast<std::size_t>(degree), 0);
  std::vector<int> out{v};
  seen[static_cast<std::size_t>(v)] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& gen : gens) {
      const int w = gen(out[head]);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PermutationGroup automorphism_group(const SimpleGraph& g, const AutomorphismOptions& options) {
  const int n = g.num_vertices();
  if (n < 1) throw InvalidArgument("automorphism search needs at least one vertex");
  if (n > options.max_vertices) {
    throw CapacityError("graph has " + std::to_string(n) + " vertices; automorphism search is limited to " +
                        std::to_string(options.max_vertices));
  }
  Cells root;
  std::vector<char> fixed(static_cast<std::size_t>(n), 0);
  for (int v : options.fixed_vertices) {
    if (v < 0 || v >= n) throw InvalidArgument("fixed vertex out of range");
    if (fixed[static_cast<std::size_t>(v)]) continue;
    fixed[static_cast<std::size_t>(v)] = 1;
    root.push_back({v});
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v) {
    if (!fixed[static_cast<std::size_t>(v)]) rest.push_back(v);
  }
  if (!rest.empty()) root.push_back(std::move(rest));

  const LeftPath path = left_path(g, std::move(root));
  std::vector<VertexMapping> gens;
  std::uint64_t order = 1;
  for (int k = path.depth() - 1; k >= 0; --k) {
    const Cells& node = path.nodes[static_cast<std::size_t>(k)];
    const int c = path.target_cell[static_cast<std::size_t>(k)];
    const int b = path.base[static_cast<std::size_t>(k)];
    auto orbit = orbit_of(b, n, gens);
    for (int w : node[static_cast<std::size_t>(c)]) {
      if (std::binary_search(orbit.begin(), orbit.end(), w)) continue;
      Cells child = individualize(node, c, w);
      refine(g, child);
      if (auto found = match_below(g, g, path, child, k + 1)) {
        gens.push_back(std::move(*found));
        orbit = orbit_of(b, n, gens);
      }
    }
    if (__builtin_mul_overflow(order, static_cast<std::uint64_t>(orbit.size()), &order)) {
      throw CapacityError("automorphism group order exceeds 64 bits");
    }
  }
  return PermutationGroup(n, std::move(gens), order);
}

std::optional<VertexMapping> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h, int max_vertices) {
  if (g.num_vertices() > max_vertices || h.num_vertices() > max_vertices) {
    throw CapacityError("isomorphism search is limited to " + std::to_string(max_vertices) + " vertices");
  }
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return std::nullopt;
  if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;
  if (g.num_vertices() == 0) return VertexMapping{};
  Cells unit(1);
  for (int v = 0; v < g.num_vertices(); ++v) unit.front().push_back(v);
  const LeftPath ref = left_path(g, unit);
  refine(h, unit);
  return match_below(g, h, ref, unit, 0);
}

std::vector<std::vector<Edge>> edge_orbits(const SimpleGraph& g, const PermutationGroup& grp) {
  if (grp.degree() != g.num_vertices()) throw InvalidArgument("group does not act on this graph's vertices");
  UnionFind uf(g.num_edges());
  const auto edges = g.edges();
  for (const auto& gen : grp.generators()) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const int j = g.edge_index(gen(edges[i].u), gen(edges[i].v));
      if (j < 0) throw InvalidArgument("group element does not preserve the edge set");
      uf.unite(static_cast<int>(i), j);
    }
  }
  std::vector<std::vector<Edge>> out;
  for (const auto& part : uf.groups()) {
    std::vector<Edge> orbit;
    for (int i : part) orbit.push_back(edges[static_cast<std::size_t>(i)]);
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<std::vector<std::pair<int, int>>> arc_orbits(const SimpleGraph& g, const PermutationGroup& grp) {
  if (grp.degree() != g.num_vertices()) throw InvalidArgument("group does not act on this graph's vertices");
  const int n = g.num_vertices();
  std::vector<int> offset(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) offset[static_cast<std::size_t>(v) + 1] = offset[static_cast<std::size_t>(v)] + g.degree(v);
  auto arc_id = [&](int u, int v) {
    const auto nbrs = g.neighbors(u);
    const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
    if (it == nbrs.end() || *it != v) throw InvalidArgument("group element does not preserve the edge set");
    return offset[static_cast<std::size_t>(u)] + static_cast<int>(it - nbrs.begin());
  };
  UnionFind uf(offset.back());
  for (const auto& gen : grp.generators()) {
    for (int u = 0; u < n; ++u) {
      for (int v : g.neighbors(u)) uf.unite(arc_id(u, v), arc_id(gen(u), gen(v)));
    }
  }
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) arcs.emplace_back(u, v);
  }
  std::vector<std::vector<std::pair<int, int>>> out;
  for (const auto& part : uf.groups()) {
    std::vector<std::pair<int, int>> orbit;
    for (int i : part) orbit.push_back(arcs[static_cast<std::size_t>(i)]);
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_edge_transitive(const SimpleGraph& g) {
  if (g.num_edges() == 0) return true;
  return edge_orbits(g, automorphism_group(g)).size() == 1;
}

bool is_vertex_transitive(const SimpleGraph& g) {
  if (g.num_vertices() <= 1) return true;
  return automorphism_group(g).orbits().size() == 1;
}

bool is_arc_transitive(const SimpleGraph& g) {
  if (g.num_edges() == 0) return true;
  return arc_orbits(g, automorphism_group(g)).size() == 1;
}

std::vector<std::string> format_generators(const PermutationGroup& grp) {
  std::vector<std::string> out;
  for (const auto& gen : grp.generators()) {
    std::string line;
    for (int i = 0; i < gen.size(); ++i) {
      if (i) line += ' ';
      line += std::to_string(gen(i) + 1);
    }
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace caygen
