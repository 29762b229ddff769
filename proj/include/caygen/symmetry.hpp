#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "caygen/graph.hpp"

namespace caygen {

/// A group of vertex mappings given by generators and its exact order.
///
/// The full element list is materialized on first request by closure under
/// the generators; the closure size is checked against the recorded order.
/// Copies share the materialized list, and concurrent readers are safe.
class PermutationGroup {
 public:
  /// Largest element count elements() will materialize.
  static constexpr std::uint64_t kMaxElements = 2'000'000;

  PermutationGroup(int degree, std::vector<VertexMapping> generators, std::uint64_t order);
  /// Order taken from the closure of `generators`.
  static PermutationGroup generated_by(int degree, std::vector<VertexMapping> generators);
  /// A group given by its full element list; closure is re-checked.
  static PermutationGroup from_elements(int degree, std::vector<VertexMapping> elements);

  int degree() const noexcept { return degree_; }
  std::span<const VertexMapping> generators() const noexcept { return generators_; }
  std::uint64_t order() const noexcept { return order_; }

  /// Sorted ascending, identity first. Throws CapacityError above kMaxElements.
  std::span<const VertexMapping> elements() const;
  bool contains(const VertexMapping& g) const;

  /// Elements fixing every listed vertex.
  PermutationGroup pointwise_stabilizer(std::span<const int> points) const;

  /// Orbits on {0..degree-1}, each sorted, ordered by smallest member.
  std::vector<std::vector<int>> orbits() const;

 private:
  struct Cache;

  int degree_ = 0;
  std::vector<VertexMapping> generators_;
  std::uint64_t order_ = 1;
  std::shared_ptr<Cache> cache_;
};

struct AutomorphismOptions {
  /// Vertices the automorphisms must fix; the result is their pointwise stabilizer.
  std::vector<int> fixed_vertices;
  int max_vertices = 1000;
};

/// Full automorphism group by partition refinement and backtracking.
///
/// The search individualizes along a leftmost path and, level by level from
/// the bottom, decides for each candidate image of the base vertex whether an
/// automorphism exists. Orbits of already found generators prune candidates,
/// so the order is the product of the basic orbit lengths.
PermutationGroup automorphism_group(const SimpleGraph& g, const AutomorphismOptions& options = {});

/// An isomorphism g -> h, or nullopt. Throws CapacityError above `max_vertices`.
std::optional<VertexMapping> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h, int max_vertices = 1000);

/// Partition of g's edges into orbits under grp, parts sorted and ordered by first edge.
std::vector<std::vector<Edge>> edge_orbits(const SimpleGraph& g, const PermutationGroup& grp);
/// Orbits of grp on arcs (ordered adjacent pairs).
std::vector<std::vector<std::pair<int, int>>> arc_orbits(const SimpleGraph& g, const PermutationGroup& grp);

bool is_edge_transitive(const SimpleGraph& g);
bool is_vertex_transitive(const SimpleGraph& g);
bool is_arc_transitive(const SimpleGraph& g);

/// One-line (1-based) image strings, one per generator.
std::vector<std::string> format_generators(const PermutationGroup& grp);

}  // namespace caygen
