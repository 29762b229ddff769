#include "caygen/caygen.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "caygen/analyze.hpp"
#include "caygen/cayley.hpp"
#include "caygen/error.hpp"
#include "caygen/verify.hpp"

struct caygen_tset {
  caygen::TranspositionSet value;
};

struct caygen_cayley {
  caygen::CayleyGraph value;
};

namespace {

struct LastError {
  std::string message;
  int line = 0;
  int column = 0;
};

thread_local LastError last_error;

caygen_status fail(caygen_status status, const std::string& message, int line = 0, int column = 0) {
  last_error = {message, line, column};
  return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
caygen_status guarded(Fn&& fn) {
  last_error = {};
  try {
    fn();
    return CAYGEN_OK;
  } catch (const caygen::ParseError& e) {
    return fail(CAYGEN_ERR_PARSE, e.message(), e.line(), e.column());
  } catch (const caygen::IoError& e) {
    return fail(CAYGEN_ERR_IO, e.what());
  } catch (const caygen::CapacityError& e) {
    return fail(CAYGEN_ERR_CAPACITY, e.what());
  } catch (const caygen::PreconditionError& e) {
    return fail(CAYGEN_ERR_PRECONDITION, e.what());
  } catch (const caygen::InvalidArgument& e) {
    return fail(CAYGEN_ERR_INVALID_ARGUMENT, e.what());
  } catch (const caygen::InconsistencyError& e) {
    return fail(CAYGEN_ERR_INCONSISTENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CAYGEN_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return fail(CAYGEN_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CAYGEN_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool condition, const char* what) {
  if (!condition) throw caygen::InvalidArgument(what);
}

caygen::VerifyOptions options_from(unsigned flags) {
  caygen::VerifyOptions opts;
  opts.extended_connectivity = (flags & CAYGEN_VERIFY_EXTENDED_CONNECTIVITY) != 0;
  return opts;
}

}  // namespace

extern "C" {

const char* caygen_version(void) { return "0.1.0"; }

const char* caygen_status_name(caygen_status status) {
  switch (status) {
    case CAYGEN_OK:
      return "ok";
    case CAYGEN_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case CAYGEN_ERR_PARSE:
      return "parse error";
    case CAYGEN_ERR_IO:
      return "i/o error";
    case CAYGEN_ERR_CAPACITY:
      return "capacity exceeded";
    case CAYGEN_ERR_PRECONDITION:
      return "precondition violated";
    case CAYGEN_ERR_INCONSISTENT:
      return "internal inconsistency";
    case CAYGEN_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* caygen_last_error(void) { return last_error.message.c_str(); }
int caygen_last_error_line(void) { return last_error.line; }
int caygen_last_error_column(void) { return last_error.column; }
void caygen_string_free(char* s) { std::free(s); }

caygen_status caygen_tset_create(int n, const int* pairs, size_t num_pairs, caygen_tset** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    require(pairs != nullptr || num_pairs == 0, "null pair array");
    std::vector<caygen::Transposition> list;
    for (size_t k = 0; k < num_pairs; ++k) list.push_back(caygen::Transposition::make(pairs[2 * k], pairs[2 * k + 1]));
    *out = new caygen_tset{caygen::TranspositionSet(n, std::move(list))};
  });
}

caygen_status caygen_tset_parse(const char* text, caygen_tset** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new caygen_tset{caygen::parse_edge_list(text)};
  });
}

caygen_status caygen_tset_load(const char* source, caygen_tset** out) {
  return guarded([&] {
    require(source != nullptr && out != nullptr, "null argument");
    *out = new caygen_tset{caygen::load_input(source)};
  });
}

caygen_status caygen_tset_family(const char* name, int n, caygen_tset** out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    *out = new caygen_tset{caygen::family(caygen::parse_family(name), n)};
  });
}

void caygen_tset_free(caygen_tset* s) { delete s; }

int caygen_tset_degree(const caygen_tset* s) { return s ? s->value.degree() : 0; }
size_t caygen_tset_size(const caygen_tset* s) { return s ? s->value.size() : 0; }

caygen_status caygen_tset_pairs(const caygen_tset* s, int* out_pairs) {
  return guarded([&] {
    require(s != nullptr && out_pairs != nullptr, "null argument");
    for (const auto& t : s->value.pairs()) {
      *out_pairs++ = t.a;
      *out_pairs++ = t.b;
    }
  });
}

caygen_status caygen_tset_format(const caygen_tset* s, char** out_text) {
  return guarded([&] {
    require(s != nullptr && out_text != nullptr, "null argument");
    *out_text = copy_string(caygen::format_edge_list(s->value));
  });
}

caygen_status caygen_tset_is_generating(const caygen_tset* s, int* out) {
  return guarded([&] {
    require(s != nullptr && out != nullptr, "null argument");
    *out = caygen::is_generating(s->value) ? 1 : 0;
  });
}

caygen_status caygen_fast_edge_transitive(const caygen_tset* s, int* out_verdict, int* out_in_range) {
  return guarded([&] {
    require(s != nullptr && out_verdict != nullptr, "null argument");
    const auto verdict = caygen::fast_is_edge_transitive(s->value);
    *out_verdict = verdict.edge_transitive ? 1 : 0;
    if (out_in_range) *out_in_range = verdict.in_theorem_range ? 1 : 0;
  });
}

caygen_status caygen_cayley_build(const caygen_tset* s, caygen_cayley** out) {
  return guarded([&] {
    require(s != nullptr && out != nullptr, "null argument");
    *out = new caygen_cayley{caygen::build(s->value)};
  });
}

void caygen_cayley_free(caygen_cayley* cg) { delete cg; }

long long caygen_cayley_num_vertices(const caygen_cayley* cg) { return cg ? cg->value.graph.num_vertices() : 0; }
long long caygen_cayley_num_edges(const caygen_cayley* cg) { return cg ? cg->value.graph.num_edges() : 0; }

caygen_status caygen_cayley_neighbors(const caygen_cayley* cg, long long v, long long* out_ids, size_t capacity,
                                      size_t* out_count) {
  return guarded([&] {
    require(cg != nullptr && out_count != nullptr, "null argument");
    require(v >= 0 && v < cg->value.graph.num_vertices(), "vertex id out of range");
    const auto nbrs = caygen::neighbors(cg->value, static_cast<int>(v));
    *out_count = nbrs.size();
    require(out_ids != nullptr || capacity == 0, "null output array");
    for (size_t k = 0; k < nbrs.size() && k < capacity; ++k) out_ids[k] = nbrs[k];
  });
}

caygen_status caygen_analyze(const caygen_tset* s, int materialize, char** out_json) {
  return guarded([&] {
    require(s != nullptr && out_json != nullptr, "null argument");
    *out_json = copy_string(caygen::to_json(caygen::analyze(s->value, materialize != 0)).dump());
  });
}

caygen_status caygen_verify(const char* claim, const caygen_tset* s, const caygen_tset* s2, unsigned flags,
                            char** out_json) {
  return guarded([&] {
    require(claim != nullptr && s != nullptr && out_json != nullptr, "null argument");
    std::optional<caygen::TranspositionSet> second;
    if (s2) second = s2->value;
    const auto report = caygen::run_claim(caygen::parse_claim(claim), s->value, second, options_from(flags));
    *out_json = copy_string(caygen::to_json(report, (flags & CAYGEN_VERIFY_TIMINGS) != 0).dump());
  });
}

caygen_status caygen_verify_sweep(const char* claim, int n, unsigned flags, char** out_json) {
  return guarded([&] {
    require(claim != nullptr && out_json != nullptr, "null argument");
    auto out = nlohmann::json::array();
    for (const auto& r : caygen::sweep(caygen::parse_claim(claim), n, options_from(flags))) {
      out.push_back(caygen::to_json(r, (flags & CAYGEN_VERIFY_TIMINGS) != 0));
    }
    *out_json = copy_string(out.dump());
  });
}

caygen_status caygen_enumerate(int n, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    auto out = nlohmann::json::array();
    for (const auto& s : caygen::enumerate_connected(n)) {
      out.push_back({{"n", s.degree()}, {"m", s.size()}, {"s", caygen::pairs_to_json(s)}});
    }
    *out_json = copy_string(out.dump());
  });
}

}  // extern "C"
