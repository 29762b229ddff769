#include "caygen/tgraph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "caygen/error.hpp"
#include "caygen/symmetry.hpp"

namespace caygen {

TranspositionSet::TranspositionSet(int n, std::vector<Transposition> pairs) : n_(n), pairs_(std::move(pairs)) {
  if (n < 1) throw InvalidArgument("degree must be >= 1");
  for (Transposition& t : pairs_) {
    t = Transposition::make(t.a, t.b);
    if (t.b > n) throw InvalidArgument("point " + std::to_string(t.b) + " exceeds degree " + std::to_string(n));
  }
  std::sort(pairs_.begin(), pairs_.end());
  if (std::adjacent_find(pairs_.begin(), pairs_.end()) != pairs_.end()) {
    throw InvalidArgument("transposition repeated in set");
  }
}

std::vector<Permutation> TranspositionSet::permutations() const {
  std::vector<Permutation> out;
  out.reserve(pairs_.size());
  for (const auto& t : pairs_) out.push_back(t.to_permutation(n_));
  return out;
}

SimpleGraph to_graph(const TranspositionSet& s) {
  std::vector<Edge> edges;
  edges.reserve(s.size());
  for (const auto& t : s.pairs()) edges.push_back(Edge{t.a - 1, t.b - 1});
  return SimpleGraph(s.degree(), std::move(edges));
}

TranspositionSet to_set(const SimpleGraph& g) {
  std::vector<Transposition> pairs;
  for (const Edge& e : g.edges()) pairs.push_back(Transposition{e.u + 1, e.v + 1});
  return TranspositionSet(g.num_vertices(), std::move(pairs));
}

bool is_generating(const TranspositionSet& s) { return is_connected(to_graph(s)); }

Family parse_family(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "star") return Family::star;
  if (name == "complete") return Family::complete;
  throw InvalidArgument("unknown family '" + std::string(name) + "' (expected path, cycle, star or complete)");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::path:
      return "path";
    case Family::cycle:
      return "cycle";
    case Family::star:
      return "star";
    case Family::complete:
      return "complete";
  }
  return "?";
}

TranspositionSet family(Family f, int n) {
  if (n < 2) throw InvalidArgument("families need n >= 2");
  if (f == Family::cycle && n < 3) throw InvalidArgument("the cycle family needs n >= 3");
  std::vector<Transposition> pairs;
  switch (f) {
    case Family::path:
      for (int i = 1; i < n; ++i) pairs.push_back({i, i + 1});
      break;
    case Family::cycle:
      for (int i = 1; i < n; ++i) pairs.push_back({i, i + 1});
      pairs.push_back({1, n});
      break;
    case Family::star:
      for (int j = 2; j <= n; ++j) pairs.push_back({1, j});
      break;
    case Family::complete:
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
      }
      break;
  }
  return TranspositionSet(n, std::move(pairs));
}

namespace {

// Cheap isomorphism invariant used to bucket candidates before exact tests:
// each vertex contributes its degree followed by its sorted neighbour degrees.
std::vector<int> bucket_key(const SimpleGraph& g) {
  std::vector<std::vector<int>> profiles;
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<int> p{g.degree(v)};
    for (int w : g.neighbors(v)) p.push_back(g.degree(w));
    std::sort(p.begin() + 1, p.end());
    profiles.push_back(std::move(p));
  }
  std::sort(profiles.begin(), profiles.end());
  std::vector<int> key{g.num_edges()};
  for (const auto& p : profiles) {
    key.push_back(-1);
    key.insert(key.end(), p.begin(), p.end());
  }
  return key;
}

}  // namespace

std::vector<TranspositionSet> enumerate_connected(int n) {
  if (n < 2 || n > kMaxEnumerationDegree) {
    throw InvalidArgument("enumeration supports 2 <= n <= " + std::to_string(kMaxEnumerationDegree));
  }
  std::vector<Edge> all_pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) all_pairs.push_back({i, j});
  }
  struct Class {
    SimpleGraph rep;
  };
  std::map<std::vector<int>, std::vector<Class>> buckets;
  const std::uint32_t subsets = 1U << all_pairs.size();
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    if (std::popcount(mask) < n - 1) continue;
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < all_pairs.size(); ++k) {
      if (mask & (1U << k)) edges.push_back(all_pairs[k]);
    }
    SimpleGraph g(n, std::move(edges));
    if (!is_connected(g)) continue;
    auto& bucket = buckets[bucket_key(g)];
    auto match = std::find_if(bucket.begin(), bucket.end(),
                              [&](const Class& c) { return find_isomorphism(c.rep, g).has_value(); });
    if (match == bucket.end()) {
      bucket.push_back({std::move(g)});
    } else if (std::lexicographical_compare(g.edges().begin(), g.edges().end(), match->rep.edges().begin(),
                                            match->rep.edges().end())) {
      match->rep = std::move(g);
    }
  }
  std::vector<TranspositionSet> out;
  for (const auto& [key, bucket] : buckets) {
    for (const auto& c : bucket) out.push_back(to_set(c.rep));
  }
  std::sort(out.begin(), out.end(), [](const TranspositionSet& a, const TranspositionSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.pairs() < b.pairs();
  });
  return out;
}

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

long long to_integer(const Token& t, int line) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
    throw ParseError("expected an integer, found '" + std::string(t.text) + "'", line, t.column);
  }
  return value;
}

}  // namespace

TranspositionSet parse_edge_list(std::string_view text) {
  int n = -1;
  long long expected = -1;
  std::vector<Transposition> pairs;
  std::vector<std::pair<int, int>> origin;  // line, column per pair
  int line_no = 0;
  int last_line = 1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    last_line = line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;
    if (tokens.size() != 2) {
      const int col = tokens.size() > 2 ? tokens[2].column : static_cast<int>(line.size()) + 1;
      throw ParseError(n < 0 ? "header must be \"n m\"" : "edge line must be \"i j\"", line_no, col);
    }
    const long long a = to_integer(tokens[0], line_no);
    const long long b = to_integer(tokens[1], line_no);
    if (n < 0) {
      if (a < 1 || a > 64) throw ParseError("vertex count must be in 1..64", line_no, tokens[0].column);
      const long long max_edges = a * (a - 1) / 2;
      if (b < 0 || b > max_edges) {
        throw ParseError("edge count must be in 0.." + std::to_string(max_edges), line_no, tokens[1].column);
      }
      n = static_cast<int>(a);
      expected = b;
      continue;
    }
    if (static_cast<long long>(pairs.size()) == expected) {
      throw ParseError("more edge lines than the declared " + std::to_string(expected), line_no, tokens[0].column);
    }
    if (a < 1 || a > n) throw ParseError("point out of range 1.." + std::to_string(n), line_no, tokens[0].column);
    if (b < 1 || b > n) throw ParseError("point out of range 1.." + std::to_string(n), line_no, tokens[1].column);
    if (a >= b) throw ParseError("edge must satisfy i < j", line_no, tokens[0].column);
    const Transposition t{static_cast<int>(a), static_cast<int>(b)};
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (pairs[k] == t) {
        throw ParseError("duplicate edge (first seen on line " + std::to_string(origin[k].first) + ")", line_no,
                         tokens[0].column);
      }
    }
    pairs.push_back(t);
    origin.emplace_back(line_no, tokens[0].column);
  }
  if (n < 0) throw ParseError("missing \"n m\" header", last_line, 1);
  if (static_cast<long long>(pairs.size()) != expected) {
    throw ParseError("expected " + std::to_string(expected) + " edge lines, found " + std::to_string(pairs.size()),
                     last_line, 1);
  }
  return TranspositionSet(n, std::move(pairs));
}

std::string format_edge_list(const TranspositionSet& s) {
  std::string out = std::to_string(s.degree()) + " " + std::to_string(s.size()) + "\n";
  for (const auto& t : s.pairs()) out += std::to_string(t.a) + " " + std::to_string(t.b) + "\n";
  return out;
}

std::string format_pairs(const TranspositionSet& s) {
  std::string out;
  for (const auto& t : s.pairs()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(t.a) + "-" + std::to_string(t.b);
  }
  return out;
}

TranspositionSet parse_family_uri(std::string_view uri) {
  constexpr std::string_view prefix = "family:";
  if (uri.substr(0, prefix.size()) != prefix) throw ParseError("family URI must start with 'family:'", 1, 1);
  const auto rest = uri.substr(prefix.size());
  const auto colon = rest.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("family URI must look like family:<name>:<n>", 1, static_cast<int>(uri.size()) + 1);
  }
  const auto name = rest.substr(0, colon);
  const auto digits = rest.substr(colon + 1);
  const int name_col = static_cast<int>(prefix.size()) + 1;
  const int n_col = name_col + static_cast<int>(colon) + 1;
  Family f{};
  try {
    f = parse_family(name);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), 1, name_col);
  }
  int n = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("family degree must be a decimal number", 1, n_col);
  }
  try {
    return family(f, n);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), 1, n_col);
  }
}

TranspositionSet load_input(const std::string& source) {
  if (source.rfind("family:", 0) == 0) return parse_family_uri(source);
  std::ifstream in(source, std::ios::binary);
  if (!in) throw IoError("cannot open '" + source + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

}  // namespace caygen
