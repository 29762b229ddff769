// Conversions between the oracle representations and library types.
#pragma once

#include <vector>

#include "caygen/graph.hpp"
#include "caygen/perm.hpp"
#include "caygen/tgraph.hpp"
#include "oracles.hpp"

namespace support {

inline caygen::SimpleGraph to_simple(const oracle::Graph& g) {
  std::vector<caygen::Edge> edges;
  for (auto [a, b] : g.edge_list()) edges.push_back(caygen::Edge{a, b});
  return caygen::SimpleGraph(g.n, edges);
}

inline oracle::Graph from_simple(const caygen::SimpleGraph& g) {
  oracle::Graph out(g.num_vertices());
  for (const auto& e : g.edges()) out.add(e.u, e.v);
  return out;
}

inline oracle::Perm to_perm(const caygen::Permutation& p) { return {p.images().begin(), p.images().end()}; }

// 0-based pairs of a transposition set.
inline oracle::EdgeList zero_based(const caygen::TranspositionSet& s) {
  oracle::EdgeList out;
  for (const auto& t : s.pairs()) out.emplace_back(t.a - 1, t.b - 1);
  return out;
}

inline caygen::TranspositionSet tset(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<caygen::Transposition> list;
  for (auto [a, b] : pairs) list.push_back(caygen::Transposition::make(a, b));
  return caygen::TranspositionSet(n, list);
}

}  // namespace support
