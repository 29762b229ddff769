#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "caygen/tgraph.hpp"

namespace caygen {

enum class Claim {
  part_a,            // T(S) ~ T(S') iff Cay(S_n,S) ~ Cay(S_n,S')
  part_b,            // T(S) edge-transitive iff Cay(S_n,S) edge-transitive
  whitney,           // Aut(T) ~ Aut(L(T)) through lifting
  feng,              // Aut(S_n,S) ~ Aut(T(S))
  restriction,       // g|_S in Aut(L(T(S))) for g in G_e
  stabilizer,        // G_e = L_e x| Aut(S_n,S)
  arc_transitivity,  // r_t swaps (e,t); edge-transitive Cayley graphs are arc-transitive
  connectivity,      // kappa = minimum degree, bipartite, K_4-free
  bipartite,         // parity classes are the two colour classes
};

std::string_view claim_name(Claim c);
/// Throws InvalidArgument for unknown names.
Claim parse_claim(std::string_view name);
std::vector<Claim> all_claims();

/// Smallest n for which the underlying statement is asserted. Reports for
/// smaller n are exploratory and never count as failures.
int claim_min_degree(Claim c);

/// Largest n the brute-force side of a claim accepts.
int claim_max_degree(Claim c, bool extended_connectivity);

struct VerifyOptions {
  /// Allows the connectivity claim at n = 5 (max-flow on 120 vertices).
  bool extended_connectivity = false;
};

/// Outcome of one theorem check. `fast` is what the theorem-based path
/// predicts and `oracle` what brute force measures; agree == (fast == oracle).
struct VerificationReport {
  Claim claim = Claim::part_b;
  int n = 0;
  TranspositionSet s;
  std::optional<TranspositionSet> s2;
  nlohmann::json fast;
  nlohmann::json oracle;
  bool agree = false;
  bool in_theorem_range = false;
  /// Extra measurements that are not part of the comparison.
  nlohmann::json detail = nlohmann::json::object();
  std::optional<double> ms_fast;
  std::optional<double> ms_oracle;

  /// Only in-range disagreements are failures.
  bool failed() const { return in_theorem_range && !agree; }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

VerificationReport verify_part_a(const TranspositionSet& s, const TranspositionSet& s2);
VerificationReport verify_part_b(const TranspositionSet& s);
VerificationReport check_whitney(const TranspositionSet& s);
VerificationReport check_feng(const TranspositionSet& s);
/// Both reports, Whitney first.
std::vector<VerificationReport> check_whitney_feng(const TranspositionSet& s);
VerificationReport check_restriction_property(const TranspositionSet& s);
VerificationReport check_stabilizer_decomposition(const TranspositionSet& s);
VerificationReport check_arc_transitivity(const TranspositionSet& s);
VerificationReport check_connectivity_corollary(const TranspositionSet& s, const VerifyOptions& options = {});
VerificationReport check_bipartite(const TranspositionSet& s);

/// Dispatches on the claim; s2 is required for part_a and rejected otherwise.
VerificationReport run_claim(Claim claim, const TranspositionSet& s, const std::optional<TranspositionSet>& s2,
                             const VerifyOptions& options = {});

/// Every connected class on n points (all unordered pairs, diagonal included,
/// for part_a), in enumeration order.
std::vector<VerificationReport> sweep(Claim claim, int n, const VerifyOptions& options = {});

/// Re-runs a report from its instance description alone.
VerificationReport replay(const VerificationReport& report, const VerifyOptions& options = {});

/// {claim, n, s, s2?, fast, oracle, agree, in_theorem_range, detail, ms_fast, ms_oracle}.
/// Timings are null when absent or when include_timings is false.
nlohmann::json to_json(const VerificationReport& report, bool include_timings = true);
VerificationReport report_from_json(const nlohmann::json& j);

nlohmann::json pairs_to_json(const TranspositionSet& s);
TranspositionSet pairs_from_json(int n, const nlohmann::json& j);

}  // namespace caygen
