#include "normalp/normalp.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "normalp/arith.hpp"
#include "normalp/classify.hpp"
#include "normalp/error.hpp"
#include "normalp/group_document.hpp"
#include "normalp/groupkit.hpp"
#include "normalp/quillen.hpp"
#include "normalp/witness.hpp"

struct normalp_group {
  normalp::PermGroup group;
};

struct normalp_witness {
  normalp::WitnessCertificate cert;
  normalp_group group;
};

struct normalp_homology {
  normalp::HomologyResult result;
};

namespace {

thread_local std::string last_error;

normalp_status status_of(normalp::ErrorKind kind) {
  switch (kind) {
    case normalp::ErrorKind::InvalidArgument: return NORMALP_E_INVALID_ARGUMENT;
    case normalp::ErrorKind::CapExceeded: return NORMALP_E_CAP_EXCEEDED;
    case normalp::ErrorKind::Precondition: return NORMALP_E_PRECONDITION;
    case normalp::ErrorKind::Singular: return NORMALP_E_SINGULAR;
    case normalp::ErrorKind::Parse: return NORMALP_E_PARSE;
  }
  return NORMALP_E_INTERNAL;
}

template <typename Fn>
normalp_status guarded(Fn&& fn) noexcept {
  try {
    last_error.clear();
    fn();
    return NORMALP_OK;
  } catch (const normalp::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return NORMALP_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return NORMALP_E_INTERNAL;
  }
}

void require(const void* ptr, const char* what) {
  if (ptr == nullptr) throw normalp::InvalidArgument(std::string(what) + " must not be NULL");
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

normalp::GroupLimits to_limits(const normalp_limits* limits) {
  normalp::GroupLimits out;
  if (limits != nullptr) {
    out.order_cap = limits->order_cap;
    out.table_cap = limits->table_cap;
  }
  return out;
}

normalp_classification to_c(const normalp::Classification& c) {
  normalp_classification out{};
  out.n = c.decomposition.n;
  out.p = c.decomposition.p;
  out.s = c.decomposition.s;
  out.m = c.decomposition.m;
  out.verdict = static_cast<normalp_verdict>(c.verdict);
  out.valuation_needed = c.valuation_needed;
  out.valuation_available = c.valuation_available;
  out.guarantee = static_cast<normalp_guarantee>(c.solvability_guarantee);
  return out;
}

normalp::Permutation perm_from(const normalp_group* g, const uint32_t* images) {
  require(images, "images");
  const std::size_t degree = g->group.degree();
  return normalp::Permutation(std::vector<normalp::Point>(images, images + degree));
}

template <typename Fn>
normalp_status derive_group(const normalp_group* g, normalp_group** out, Fn&& fn) noexcept {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = new normalp_group{fn(g->group)};
  });
}

}  // namespace

extern "C" {

uint32_t normalp_abi_version(void) { return NORMALP_ABI_VERSION; }
const char* normalp_last_error(void) { return last_error.c_str(); }
void normalp_string_free(char* s) { std::free(s); }

normalp_limits normalp_default_limits(void) {
  const normalp::GroupLimits d;
  return {d.order_cap, d.table_cap};
}

int normalp_is_prime(uint64_t n) { return normalp::is_prime(n) ? 1 : 0; }

normalp_status normalp_factorize(uint64_t m, uint64_t* primes, uint32_t* exponents, size_t capacity,
                                 size_t* count) {
  return guarded([&] {
    require(count, "count");
    const auto f = normalp::factorize(m);
    *count = f.parts.size();
    if (f.parts.size() > capacity) throw normalp::InvalidArgument("factor buffer too small");
    for (std::size_t i = 0; i < f.parts.size(); ++i) {
      if (primes) primes[i] = f.parts[i].prime;
      if (exponents) exponents[i] = f.parts[i].exponent;
    }
  });
}

normalp_status normalp_gamma(uint32_t t, uint64_t q, char** decimal) {
  return guarded([&] {
    require(decimal, "decimal");
    *decimal = duplicate(normalp::gamma(t, q).str());
  });
}

normalp_status normalp_big_gamma(uint64_t m, char** decimal) {
  return guarded([&] {
    require(decimal, "decimal");
    *decimal = duplicate(normalp::big_gamma(m).str());
  });
}

normalp_status normalp_big_gamma_valuation(uint64_t m, uint64_t p, uint32_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = normalp::big_gamma_valuation(m, p);
  });
}

const char* normalp_verdict_name(normalp_verdict v) {
  return normalp::to_string(static_cast<normalp::Verdict>(v)).data();
}

const char* normalp_guarantee_name(normalp_guarantee g) {
  return normalp::to_string(static_cast<normalp::SolvabilityGuarantee>(g)).data();
}

normalp_status normalp_classify(uint64_t n, uint64_t p, normalp_classification* out) {
  return guarded([&] {
    require(out, "out");
    *out = to_c(normalp::classify_order(n, p));
  });
}

normalp_status normalp_sieve(uint64_t p, uint64_t lo, uint64_t hi, normalp_classification** rows,
                             size_t* count) {
  return guarded([&] {
    require(rows, "rows");
    require(count, "count");
    const auto result = normalp::sieve(p, lo, hi);
    auto* buffer = static_cast<normalp_classification*>(
        std::malloc(sizeof(normalp_classification) * (result.empty() ? 1 : result.size())));
    if (buffer == nullptr) throw std::bad_alloc();
    for (std::size_t i = 0; i < result.size(); ++i) buffer[i] = to_c(result[i]);
    *rows = buffer;
    *count = result.size();
  });
}

void normalp_classifications_free(normalp_classification* rows) { std::free(rows); }

normalp_status normalp_group_create(uint32_t degree, const uint32_t* images, size_t generator_count,
                                    const normalp_limits* limits, normalp_group** out) {
  return guarded([&] {
    require(out, "out");
    if (generator_count > 0) require(images, "images");
    std::vector<normalp::Permutation> gens;
    for (std::size_t i = 0; i < generator_count; ++i) {
      const uint32_t* row = images + i * degree;
      gens.emplace_back(std::vector<normalp::Point>(row, row + degree));
    }
    *out = new normalp_group{normalp::PermGroup(degree, std::move(gens), to_limits(limits))};
  });
}

normalp_status normalp_group_read_document(const char* text, const normalp_limits* limits,
                                           normalp_group** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new normalp_group{normalp::to_group(normalp::parse_group_document(text), to_limits(limits))};
  });
}

normalp_status normalp_group_write_document(const normalp_group* g, const char* name, char** text) {
  return guarded([&] {
    require(g, "group");
    require(text, "text");
    std::optional<std::string> label;
    if (name != nullptr) label = name;
    *text = duplicate(normalp::write_group_document(normalp::to_document(g->group, label)));
  });
}

void normalp_group_free(normalp_group* g) { delete g; }

uint32_t normalp_group_degree(const normalp_group* g) {
  return g ? static_cast<uint32_t>(g->group.degree()) : 0;
}

uint64_t normalp_group_order(const normalp_group* g) { return g ? g->group.order() : 0; }

size_t normalp_group_generator_count(const normalp_group* g) { return g ? g->group.generators().size() : 0; }

normalp_status normalp_group_generator(const normalp_group* g, size_t index, uint32_t* images) {
  return guarded([&] {
    require(g, "group");
    require(images, "images");
    const auto& gens = g->group.generators();
    if (index >= gens.size()) throw normalp::InvalidArgument("generator index out of range");
    const auto src = gens[index].images();
    std::copy(src.begin(), src.end(), images);
  });
}

normalp_status normalp_group_contains(const normalp_group* g, const uint32_t* images, int* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = g->group.contains(perm_from(g, images)) ? 1 : 0;
  });
}

normalp_status normalp_group_sylow(const normalp_group* g, uint64_t p, normalp_group** out) {
  return derive_group(g, out, [p](const normalp::PermGroup& x) { return normalp::sylow_subgroup(x, p); });
}

normalp_status normalp_group_p_core(const normalp_group* g, uint64_t p, normalp_group** out) {
  return derive_group(g, out, [p](const normalp::PermGroup& x) { return normalp::p_core(x, p); });
}

normalp_status normalp_group_fitting(const normalp_group* g, normalp_group** out) {
  return derive_group(g, out, [](const normalp::PermGroup& x) { return normalp::fitting(x); });
}

normalp_status normalp_group_frattini(const normalp_group* g, normalp_group** out) {
  return derive_group(g, out, [](const normalp::PermGroup& x) { return normalp::frattini_p(x); });
}

normalp_status normalp_group_is_solvable(const normalp_group* g, int* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = normalp::is_solvable(g->group) ? 1 : 0;
  });
}

normalp_status normalp_group_quotient_p_core_check(const normalp_group* g, uint64_t p, int* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = normalp::quotient_p_core_check(g->group, p) ? 1 : 0;
  });
}

normalp_status normalp_witness_construct(uint64_t n, uint64_t p, const normalp_limits* limits,
                                         normalp_witness** out) {
  return guarded([&] {
    require(out, "out");
    auto cert = normalp::construct_witness(n, p, to_limits(limits));
    normalp::PermGroup group = cert.group;
    *out = new normalp_witness{std::move(cert), normalp_group{std::move(group)}};
  });
}

void normalp_witness_free(normalp_witness* w) { delete w; }

normalp_certificate normalp_witness_certificate(const normalp_witness* w) {
  normalp_certificate out{};
  if (w == nullptr) return out;
  const auto& c = w->cert;
  out.n = c.n;
  out.p = c.p;
  out.s = c.s;
  out.m = c.m;
  out.order_ok = c.checks.order_ok;
  out.p_core_trivial = c.checks.p_core_trivial;
  out.solvable = c.checks.solvable;
  out.transitive_on_k = c.checks.transitive_on_k;
  out.point_stabilizer_is_sylow = c.checks.point_stabilizer_is_sylow;
  return out;
}

const normalp_group* normalp_witness_group(const normalp_witness* w) { return w ? &w->group : nullptr; }

normalp_status normalp_witness_verify(const normalp_witness* w, int* valid) {
  return guarded([&] {
    require(w, "witness");
    require(valid, "valid");
    *valid = normalp::verify_witness(w->cert) ? 1 : 0;
  });
}

normalp_status normalp_quillen(const normalp_group* g, uint64_t p, size_t poset_cap, normalp_homology** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = new normalp_homology{normalp::brown_complex_homology(g->group, p, poset_cap)};
  });
}

void normalp_homology_free(normalp_homology* h) { delete h; }

int normalp_homology_empty(const normalp_homology* h) { return h && h->result.empty ? 1 : 0; }

size_t normalp_homology_poset_size(const normalp_homology* h) {
  return h && !h->result.face_counts.empty() ? h->result.face_counts.front() : 0;
}

size_t normalp_homology_dimension_count(const normalp_homology* h) { return h ? h->result.face_counts.size() : 0; }

size_t normalp_homology_face_count(const normalp_homology* h, size_t d) {
  return h && d < h->result.face_counts.size() ? h->result.face_counts[d] : 0;
}

uint64_t normalp_homology_betti(const normalp_homology* h, size_t d) {
  return h && d < h->result.betti.size() ? h->result.betti[d] : 0;
}

size_t normalp_homology_torsion_count(const normalp_homology* h, size_t d) {
  return h && d < h->result.torsion.size() ? h->result.torsion[d].size() : 0;
}

normalp_status normalp_homology_torsion(const normalp_homology* h, size_t d, size_t i, char** decimal) {
  return guarded([&] {
    require(h, "homology");
    require(decimal, "decimal");
    if (d >= h->result.torsion.size() || i >= h->result.torsion[d].size()) {
      throw normalp::InvalidArgument("torsion index out of range");
    }
    *decimal = duplicate(h->result.torsion[d][i].str());
  });
}

size_t normalp_homology_components(const normalp_homology* h) { return h ? h->result.components : 0; }
int normalp_homology_connected(const normalp_homology* h) { return h && h->result.connected ? 1 : 0; }
int normalp_homology_acyclic(const normalp_homology* h) { return h && h->result.acyclic ? 1 : 0; }

int64_t normalp_homology_euler_from_faces(const normalp_homology* h) {
  return h ? h->result.reduced_euler_from_faces() : 0;
}

int64_t normalp_homology_euler_from_betti(const normalp_homology* h) {
  return h ? h->result.reduced_euler_from_betti() : 0;
}

}  // extern "C"
