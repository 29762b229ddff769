#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "caygen/tgraph.hpp"

namespace caygen {

/// Largest degree for which analyze() materializes the Cayley graph.
inline constexpr int kMaxAnalyzeMaterializeDegree = 5;

struct CayleySummary {
  int vertices = 0;
  int edges = 0;
  bool bipartite = false;
  std::uint64_t aut_order = 0;
  std::uint64_t stabilizer_order = 0;  // |G_e|
  std::uint64_t kernel_order = 0;      // |L_e|
  int connectivity = 0;
};

struct Analysis {
  int n = 0;
  std::size_t size = 0;
  std::vector<Transposition> pairs;
  bool generating = false;
  std::optional<bool> t_edge_transitive;
  std::optional<std::uint64_t> t_aut_order;
  std::vector<std::string> t_aut_generators;  // one-line image format
  std::optional<bool> cayley_edge_transitive;
  bool in_theorem_range = false;
  std::optional<CayleySummary> cayley;
  std::string note;
};

/// Throws CapacityError when materialization is requested above kMaxAnalyzeMaterializeDegree.
Analysis analyze(const TranspositionSet& s, bool materialize);

nlohmann::json to_json(const Analysis& a);

}  // namespace caygen
