#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "caygen/graph.hpp"
#include "caygen/perm.hpp"

namespace caygen {

/// A set of transpositions of S_n; equivalently the edge set of T(S) on {1..n}.
class TranspositionSet {
 public:
  TranspositionSet() = default;
  /// Sorts the pairs; throws InvalidArgument on repeats or points outside {1..n}.
  TranspositionSet(int n, std::vector<Transposition> pairs);

  int degree() const noexcept { return n_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  const std::vector<Transposition>& pairs() const noexcept { return pairs_; }
  std::vector<Permutation> permutations() const;

  friend bool operator==(const TranspositionSet&, const TranspositionSet&) = default;
  friend auto operator<=>(const TranspositionSet&, const TranspositionSet&) = default;

 private:
  int n_ = 0;
  std::vector<Transposition> pairs_;
};

/// T(S): point i becomes vertex i-1.
SimpleGraph to_graph(const TranspositionSet& s);
TranspositionSet to_set(const SimpleGraph& g);

/// S generates S_n iff T(S) is connected.
bool is_generating(const TranspositionSet& s);

enum class Family { path, cycle, star, complete };

/// Accepts "path", "cycle", "star", "complete"; throws InvalidArgument otherwise.
Family parse_family(std::string_view name);
std::string_view family_name(Family f);
/// Throws InvalidArgument for n < 2, or n < 3 for the cycle.
TranspositionSet family(Family f, int n);

/// Largest degree enumerate_connected() accepts.
inline constexpr int kMaxEnumerationDegree = 7;

/// One representative per isomorphism class of connected graphs on n points,
/// each the lexicographically smallest edge set in its class. Output is sorted
/// by edge count, then lexicographically. Requires 2 <= n <= 7.
std::vector<TranspositionSet> enumerate_connected(int n);

// Edge-list text format: optional '#' comment lines, then "n m", then m lines "i j"
// with 1 <= i < j <= n.

/// Throws ParseError with 1-based line/column diagnostics.
TranspositionSet parse_edge_list(std::string_view text);
std::string format_edge_list(const TranspositionSet& s);
/// "1-2 2-3 3-4"
std::string format_pairs(const TranspositionSet& s);

/// "family:<name>:<n>"; throws ParseError on malformed URIs.
TranspositionSet parse_family_uri(std::string_view uri);

/// A family URI or a path to an edge-list file (IoError when unreadable).
TranspositionSet load_input(const std::string& source);

}  // namespace caygen
