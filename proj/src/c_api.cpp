// SPDX-License-Identifier: Apache-2.0
#include "ractor/ractor.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "ractor/io.hpp"
#include "ractor/pipeline.hpp"

struct ractor_polytope {
  ractor::Polytope value;
};
struct ractor_coloring {
  ractor::Polytope polytope;
  ractor::FacetColoring value;
};
struct ractor_base {
  ractor::BaseCase value;
};
struct ractor_homology {
  ractor::CoverResult value;
};

namespace {

thread_local std::string last_error;

ractor_status fail(ractor_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
ractor_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const ractor::InputError& e) {
    return fail(RACTOR_ERR_INPUT, e.what());
  } catch (const ractor::ColoringError& e) {
    return fail(RACTOR_ERR_NO_SOLUTION, e.what());
  } catch (const ractor::DisconnectedCover& e) {
    return fail(RACTOR_ERR_DISCONNECTED, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RACTOR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RACTOR_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const ractor::zsmith::TorsionProfile* profile_of(const ractor_homology* h, ractor_method which) {
  if (!h) return nullptr;
  if (which == RACTOR_METHOD_RS && h->value.rs) return &*h->value.rs;
  if (which == RACTOR_METHOD_CELLS && h->value.cells) return &h->value.cells->h1;
  return nullptr;
}

}  // namespace

extern "C" {

const char* ractor_version(void) { return "0.1.0"; }
const char* ractor_last_error(void) { return last_error.c_str(); }
void ractor_string_free(char* s) { std::free(s); }

ractor_status ractor_polytope_load(const char* source, ractor_polytope** out) {
  if (!source || !out) return fail(RACTOR_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new ractor_polytope{ractor::load_polytope(source)};
    return RACTOR_OK;
  });
}

ractor_status ractor_polytope_from_json(const char* text, ractor_polytope** out) {
  if (!text || !out) return fail(RACTOR_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new ractor_polytope{ractor::polytope_from_json(text)};
    return RACTOR_OK;
  });
}

size_t ractor_polytope_facet_count(const ractor_polytope* p) { return p ? p->value.facet_count() : 0; }
void ractor_polytope_free(ractor_polytope* p) { delete p; }

ractor_status ractor_coloring_search(const ractor_polytope* p, ractor_coloring** out) {
  if (!p || !out) return fail(RACTOR_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new ractor_coloring{p->value, ractor::search_coloring(p->value)};
    return RACTOR_OK;
  });
}

ractor_status ractor_coloring_from_json(const ractor_polytope* p, const char* text, ractor_coloring** out) {
  if (!p || !text || !out) return fail(RACTOR_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new ractor_coloring{p->value, ractor::coloring_from_json(p->value, text)};
    return RACTOR_OK;
  });
}

ractor_status ractor_coloring_load(const ractor_polytope* p, const char* path, ractor_coloring** out) {
  if (!p || !path || !out) return fail(RACTOR_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new ractor_coloring{p->value, ractor::coloring_from_json(p->value, ractor::read_file(path))};
    return RACTOR_OK;
  });
}

ractor_status ractor_coloring_to_json(const ractor_coloring* c, char** out) {
  if (!c || !out) return fail(RACTOR_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(ractor::coloring_to_json(c->polytope, c->value));
    return RACTOR_OK;
  });
}

void ractor_coloring_free(ractor_coloring* c) { delete c; }

ractor_status ractor_base_verify(const ractor_polytope* p, const ractor_coloring* c, ractor_base** out) {
  if (!p || !out) return fail(RACTOR_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    std::optional<ractor::FacetColoring> coloring;
    if (c) coloring = c->value;
    *out = new ractor_base{ractor::verify_base(p->value, coloring)};
    return RACTOR_OK;
  });
}

int ractor_base_passed(const ractor_base* b) { return b && b->value.passed() ? 1 : 0; }
size_t ractor_base_check_count(const ractor_base* b) { return b ? b->value.checks.size() : 0; }

const char* ractor_base_check_name(const ractor_base* b, size_t i) {
  return b && i < b->value.checks.size() ? b->value.checks[i].name.c_str() : nullptr;
}
int ractor_base_check_passed(const ractor_base* b, size_t i) {
  return b && i < b->value.checks.size() && b->value.checks[i].passed ? 1 : 0;
}
const char* ractor_base_check_detail(const ractor_base* b, size_t i) {
  return b && i < b->value.checks.size() ? b->value.checks[i].detail.c_str() : nullptr;
}

ractor_status ractor_base_certificate_json(const ractor_base* b, char** out) {
  if (!b || !out) return fail(RACTOR_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(b->value.certificate_json());
    return RACTOR_OK;
  });
}

void ractor_base_free(ractor_base* b) { delete b; }

ractor_status ractor_cover_homology(const ractor_base* b, size_t p, ractor_method method, unsigned threads,
                                    ractor_homology** out) {
  if (!b || !out) return fail(RACTOR_ERR_ARGUMENT, "null argument");
  if (p < 1) return fail(RACTOR_ERR_ARGUMENT, "cover degree must be at least 1");
  ractor::Method m;
  switch (method) {
    case RACTOR_METHOD_RS: m = ractor::Method::rs; break;
    case RACTOR_METHOD_CELLS: m = ractor::Method::cells; break;
    case RACTOR_METHOD_BOTH: m = ractor::Method::both; break;
    default: return fail(RACTOR_ERR_ARGUMENT, "unknown method");
  }
  if (!b->value.complex || !b->value.wall)
    return fail(RACTOR_ERR_STATE, "base case has no co-oriented wall");
  return guarded([&] {
    *out = new ractor_homology{ractor::cover_homology(b->value, p, m, threads)};
    return RACTOR_OK;
  });
}

size_t ractor_homology_p(const ractor_homology* h) { return h ? h->value.p : 0; }
size_t ractor_homology_index(const ractor_homology* h) { return h ? h->value.index : 0; }
int ractor_homology_involutions(const ractor_homology* h) { return h && h->value.involutions ? 1 : 0; }
int ractor_homology_has(const ractor_homology* h, ractor_method which) {
  return profile_of(h, which) ? 1 : 0;
}
size_t ractor_homology_betti(const ractor_homology* h, ractor_method which) {
  const auto* t = profile_of(h, which);
  return t ? t->betti : 0;
}
size_t ractor_homology_two_rank(const ractor_homology* h, ractor_method which) {
  const auto* t = profile_of(h, which);
  return t ? t->two_rank() : 0;
}

ractor_status ractor_homology_factors(const ractor_homology* h, ractor_method which, char** out) {
  if (!h || !out) return fail(RACTOR_ERR_ARGUMENT, "null argument");
  const auto* t = profile_of(h, which);
  if (!t) return fail(RACTOR_ERR_STATE, "method was not run");
  return guarded([&] {
    *out = dup_string(t->factors_string(';'));
    return RACTOR_OK;
  });
}

int ractor_homology_agree(const ractor_homology* h) { return h && h->value.agree() ? 1 : 0; }

ractor_status ractor_homology_euler(const ractor_homology* h, long* out) {
  if (!h || !out) return fail(RACTOR_ERR_ARGUMENT, "null argument");
  if (!h->value.cells) return fail(RACTOR_ERR_STATE, "cellular method was not run");
  *out = h->value.cells->euler_characteristic;
  return RACTOR_OK;
}

size_t ractor_homology_elapsed_ms(const ractor_homology* h) { return h ? h->value.elapsed_ms : 0; }
void ractor_homology_free(ractor_homology* h) { delete h; }

}  // extern "C"
