// caygen: command-line front end over the caygen C API.
//
//   caygen analyze <source> [--materialize] [--json]
//   caygen verify <claim> (--n N | --instance SRC [--instance2 SRC]) [--json] [--timings]
//   caygen enumerate <n> [--json] [--allow-slow]
//
// <source> is an edge-list file or a family URI such as family:star:5.
// Exit codes: 0 ok/agree, 1 disagreement, 2 usage or capacity, 3 I/O or parse error.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "caygen/caygen.h"

namespace {

using json = nlohmann::json;

enum ExitCode { kOk = 0, kDisagree = 1, kUsage = 2, kInput = 3 };

struct TsetDeleter {
  void operator()(caygen_tset* s) const { caygen_tset_free(s); }
};
using TsetPtr = std::unique_ptr<caygen_tset, TsetDeleter>;

struct CString {
  char* ptr = nullptr;
  ~CString() { caygen_string_free(ptr); }
};

int exit_code_for(caygen_status status) {
  switch (status) {
    case CAYGEN_OK:
      return kOk;
    case CAYGEN_ERR_PARSE:
    case CAYGEN_ERR_IO:
      return kInput;
    case CAYGEN_ERR_INCONSISTENT:
    case CAYGEN_ERR_INTERNAL:
      return kDisagree;
    case CAYGEN_ERR_INVALID_ARGUMENT:
    case CAYGEN_ERR_CAPACITY:
    case CAYGEN_ERR_PRECONDITION:
      return kUsage;
  }
  return kUsage;
}

int report_error(caygen_status status, const std::string& context) {
  std::cerr << "caygen: " << context << ": " << caygen_status_name(status) << ": " << caygen_last_error() << "\n";
  return exit_code_for(status);
}

std::string yes_no(const json& value) {
  if (value.is_null()) return "n/a";
  return value.get<bool>() ? "yes" : "no";
}

std::string pairs_text(const json& pairs) {
  std::string out;
  for (const auto& p : pairs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p[0].get<int>()) + "-" + std::to_string(p[1].get<int>());
  }
  return out.empty() ? "(none)" : out;
}

void row(std::ostream& out, const std::string& label, const std::string& value) {
  out << std::left << std::setw(26) << (label + ":") << value << "\n";
}

std::string value_text(const json& v) {
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

int load(const std::string& source, TsetPtr& out) {
  caygen_tset* raw = nullptr;
  const auto status = caygen_tset_load(source.c_str(), &raw);
  if (status != CAYGEN_OK) {
    std::cerr << "caygen: " << source;
    if (caygen_last_error_line() > 0) std::cerr << ":" << caygen_last_error_line() << ":" << caygen_last_error_column();
    std::cerr << ": " << caygen_status_name(status) << ": " << caygen_last_error() << "\n";
    return exit_code_for(status);
  }
  out.reset(raw);
  return kOk;
}

int run_analyze(const std::string& source, bool materialize, bool as_json) {
  TsetPtr s;
  if (const int rc = load(source, s); rc != kOk) return rc;
  CString text;
  if (const auto st = caygen_analyze(s.get(), materialize ? 1 : 0, &text.ptr); st != CAYGEN_OK) {
    return report_error(st, "analyze");
  }
  const json a = json::parse(text.ptr);
  if (as_json) {
    std::cout << a.dump(2) << "\n";
    return kOk;
  }
  row(std::cout, "n", std::to_string(a["n"].get<int>()));
  row(std::cout, "|S|", std::to_string(a["size"].get<int>()));
  row(std::cout, "transpositions", pairs_text(a["s"]));
  row(std::cout, "generating", yes_no(a["generating"]));
  if (a["generating"].get<bool>()) {
    row(std::cout, "T edge-transitive", yes_no(a["t_edge_transitive"]));
    row(std::cout, "|Aut(T)|", a["t_aut_order"].dump());
    row(std::cout, "Cayley edge-transitive", yes_no(a["cayley_edge_transitive"]));
    row(std::cout, "theorem range (n >= 5)", yes_no(a["in_theorem_range"]));
    if (!a["cayley"].is_null()) {
      const auto& c = a["cayley"];
      row(std::cout, "Cayley vertices", c["vertices"].dump());
      row(std::cout, "Cayley edges", c["edges"].dump());
      row(std::cout, "bipartite", yes_no(c["bipartite"]));
      row(std::cout, "|Aut(Cay)|", c["aut_order"].dump());
      row(std::cout, "|G_e|", c["stabilizer_order"].dump());
      row(std::cout, "|L_e|", c["kernel_order"].dump());
      row(std::cout, "vertex connectivity", c["connectivity"].dump());
    }
  }
  if (!a["note"].get<std::string>().empty()) row(std::cout, "note", a["note"].get<std::string>());
  return kOk;
}

struct VerifyArgs {
  std::string claim;
  int n = 0;
  std::string instance;
  std::string instance2;
  bool as_json = false;
  bool timings = false;
  bool extended_connectivity = false;
};

int run_verify(const VerifyArgs& args) {
  unsigned flags = 0;
  if (args.timings) flags |= CAYGEN_VERIFY_TIMINGS;
  if (args.extended_connectivity) flags |= CAYGEN_VERIFY_EXTENDED_CONNECTIVITY;

  json reports = json::array();
  CString text;
  if (!args.instance.empty()) {
    TsetPtr s;
    TsetPtr s2;
    if (const int rc = load(args.instance, s); rc != kOk) return rc;
    if (!args.instance2.empty()) {
      if (const int rc = load(args.instance2, s2); rc != kOk) return rc;
    }
    const auto st = caygen_verify(args.claim.c_str(), s.get(), s2.get(), flags, &text.ptr);
    if (st != CAYGEN_OK) return report_error(st, "verify " + args.claim);
    reports.push_back(json::parse(text.ptr));
  } else {
    if (args.n <= 0) {
      std::cerr << "caygen: verify needs --n or --instance\n";
      return kUsage;
    }
    const auto st = caygen_verify_sweep(args.claim.c_str(), args.n, flags, &text.ptr);
    if (st != CAYGEN_OK) return report_error(st, "verify " + args.claim);
    reports = json::parse(text.ptr);
  }

  int agree = 0;
  int failures = 0;
  json offending = json::array();
  for (const auto& r : reports) {
    if (r["agree"].get<bool>()) {
      ++agree;
    } else if (r["in_theorem_range"].get<bool>()) {
      ++failures;
      offending.push_back(r);
    }
  }
  if (args.as_json) {
    json doc = {{"claim", args.claim},
                {"reports", reports},
                {"total", reports.size()},
                {"agree", agree},
                {"failures", failures}};
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << std::left << std::setw(17) << r["claim"].get<std::string>() << " n=" << r["n"].get<int>()
                << "  S=" << pairs_text(r["s"]);
      if (r.contains("s2")) std::cout << "  S'=" << pairs_text(r["s2"]);
      std::cout << "  fast=" << value_text(r["fast"]) << "  oracle=" << value_text(r["oracle"]) << "  "
                << (r["agree"].get<bool>() ? "agree" : (r["in_theorem_range"].get<bool>() ? "DISAGREE" : "differ"));
      if (!r["in_theorem_range"].get<bool>()) std::cout << " (exploratory)";
      if (args.timings) {
        std::cout << std::fixed << std::setprecision(2) << "  ms=" << r["ms_fast"].get<double>() << "/"
                  << r["ms_oracle"].get<double>();
      }
      std::cout << "\n";
    }
    std::cout << reports.size() << " reports, " << agree << " agree, " << failures << " failures\n";
  }
  if (failures > 0) {
    for (const auto& r : offending) std::cerr << "caygen: disagreement: " << r.dump() << "\n";
    return kDisagree;
  }
  return kOk;
}

int run_enumerate(int n, bool as_json, bool allow_slow) {
  if (n >= 6 && !allow_slow) {
    std::cerr << "caygen: enumerating n = " << n << " takes a while; pass --allow-slow\n";
    return kUsage;
  }
  CString text;
  if (const auto st = caygen_enumerate(n, &text.ptr); st != CAYGEN_OK) return report_error(st, "enumerate");
  const json classes = json::parse(text.ptr);
  if (as_json) {
    std::cout << classes.dump(2) << "\n";
    return kOk;
  }
  for (const auto& c : classes) std::cout << pairs_text(c["s"]) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley graphs of S_n generated by transpositions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(caygen_version()));

  std::string source;
  bool materialize = false;
  bool analyze_json = false;
  auto* analyze = app.add_subcommand("analyze", "Analyze a transposition set and its Cayley graph");
  analyze->add_option("source", source, "Edge-list file or family:<name>:<n>")->required();
  analyze->add_flag("--materialize", materialize, "Build the Cayley graph (n <= 5) and report its invariants");
  analyze->add_flag("--json", analyze_json, "Emit a single JSON document");

  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "Check a claim against brute-force oracles");
  verify->add_option("claim", vargs.claim, "part_a, part_b, whitney, feng, restriction, stabilizer, "
                                           "arc_transitivity, connectivity or bipartite")
      ->required();
  verify->add_option("--n", vargs.n, "Sweep every connected class on n points");
  verify->add_option("--instance", vargs.instance, "Single instance (edge-list file or family URI)");
  verify->add_option("--instance2", vargs.instance2, "Second instance for part_a");
  verify->add_flag("--json", vargs.as_json, "Emit a single JSON document");
  verify->add_flag("--timings", vargs.timings, "Include per-path timings");
  verify->add_flag("--extended-connectivity", vargs.extended_connectivity, "Allow the connectivity claim at n = 5");

  int enum_n = 0;
  bool enum_json = false;
  bool allow_slow = false;
  auto* enumerate = app.add_subcommand("enumerate", "List connected transposition graphs up to isomorphism");
  enumerate->add_option("n", enum_n, "Number of points (2..7)")->required();
  enumerate->add_flag("--json", enum_json, "Emit a JSON array");
  enumerate->add_flag("--allow-slow", allow_slow, "Permit n = 6 and n = 7");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (*analyze) return run_analyze(source, materialize, analyze_json);
  if (*verify) return run_verify(vargs);
  if (*enumerate) return run_enumerate(enum_n, enum_json, allow_slow);
  return kUsage;
}
