#include "orbit_euler.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/arith.hpp"
#include "core/catalog.hpp"
#include "core/error.hpp"
#include "core/lattice.hpp"
#include "core/lie.hpp"
#include "core/marks.hpp"
#include "core/permutation.hpp"
#include "core/qidentities.hpp"
#include "core/report.hpp"

namespace oe = orbit_euler;

struct oe_group {
  oe::FiniteGroup group;
  std::string spec;
};

namespace {

thread_local std::string last_error;

template <class F>
oe_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return OE_OK;
  } catch (const oe::Error& e) {
    last_error = e.what();
    return static_cast<oe_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return OE_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return OE_INTERNAL;
  }
}

oe_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return OE_NULL_ARGUMENT;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

oe::Format format_of(oe_format f) {
  switch (f) {
    case OE_FORMAT_TEXT: return oe::Format::kText;
    case OE_FORMAT_JSON: return oe::Format::kJson;
    case OE_FORMAT_CSV: return oe::Format::kCsv;
  }
  throw oe::Error(oe::ErrorCode::kInvalidArgument, "unknown format");
}

void check_element(const oe_group* g, uint32_t a) {
  if (a >= g->group.order())
    throw oe::Error(oe::ErrorCode::kInvalidArgument, "element index out of range");
}

}  // namespace

extern "C" {

const char* oe_version(void) { return ORBIT_EULER_VERSION; }

const char* oe_status_name(oe_status s) {
  switch (s) {
    case OE_OK: return "Ok";
    case OE_NULL_ARGUMENT: return "NullArgument";
    case OE_OUT_OF_MEMORY: return "OutOfMemory";
    case OE_INTERNAL: return "Internal";
    default:
      if (s >= OE_PARSE_ERROR && s <= OE_INCONSISTENT) return oe::to_string(static_cast<oe::ErrorCode>(s));
      return "Unknown";
  }
}

const char* oe_last_error(void) { return last_error.c_str(); }

size_t oe_default_cap(void) { return oe::default_order_cap(); }

void oe_string_free(char* s) { std::free(s); }

oe_status oe_group_create(const char* spec, size_t cap, oe_group** out) {
  if (spec == nullptr) return null_argument("spec");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    auto g = oe::catalog_group(spec, cap == 0 ? oe::default_order_cap() : cap);
    *out = new oe_group{std::move(g), spec};
  });
}

void oe_group_destroy(oe_group* g) { delete g; }

size_t oe_group_order(const oe_group* g) { return g ? g->group.order() : 0; }

const char* oe_group_spec(const oe_group* g) { return g ? g->spec.c_str() : ""; }

oe_status oe_group_multiply(const oe_group* g, uint32_t a, uint32_t b, uint32_t* out) {
  if (g == nullptr) return null_argument("group");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    check_element(g, a);
    check_element(g, b);
    *out = g->group.mul(a, b);
  });
}

oe_status oe_group_element_order(const oe_group* g, uint32_t a, uint32_t* out) {
  if (g == nullptr) return null_argument("group");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    check_element(g, a);
    *out = g->group.element_order(a);
  });
}

oe_status oe_count_p_singular(const oe_group* g, uint32_t p, oe_count_method method, uint64_t* out) {
  if (g == nullptr) return null_argument("group");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    switch (method) {
      case OE_COUNT_BRUTE: *out = oe::count_p_singular_brute(g->group, p); return;
      case OE_COUNT_CYCLIC: *out = oe::count_p_singular_cyclic(g->group, p); return;
      case OE_COUNT_EULER: *out = oe::count_p_singular_euler(g->group, p); return;
    }
    throw oe::Error(oe::ErrorCode::kInvalidArgument, "unknown count method");
  });
}

oe_status oe_count_p_singular_classes(const oe_group* g, uint32_t p, uint64_t* out) {
  if (g == nullptr) return null_argument("group");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    if (!oe::is_prime(p)) throw oe::Error(oe::ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
    uint64_t n = 0;
    for (const auto& cls : oe::element_conjugacy_classes(g->group))
      if (oe::is_power_of(g->group.element_order(cls.front()), p)) ++n;
    *out = n;
  });
}

oe_status oe_report(const oe_group* g, uint32_t p, oe_format format, char** out, int* all_passed) {
  if (g == nullptr) return null_argument("group");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const auto r = oe::analyze(g->group, p);
    auto text = oe::render(r, format_of(format));
    if (all_passed) *all_passed = r.all_passed() ? 1 : 0;
    *out = dup(text);
  });
}

oe_status oe_verify_group(const oe_group* g, uint32_t p, unsigned checks, int* passed, char** detail_json) {
  if (g == nullptr) return null_argument("group");
  if (passed == nullptr) return null_argument("passed");
  if (detail_json) *detail_json = nullptr;
  return guarded([&] {
    nlohmann::ordered_json results = nlohmann::ordered_json::object();
    bool ok = true;
    auto add = [&](const char* name, const oe::Verdict& v) {
      ok = ok && v.passed;
      results[name] = oe::to_json(v);
    };
    if (checks & (OE_CHECK_COUNTS | OE_CHECK_FROBENIUS | OE_CHECK_BROWN | OE_CHECK_RADICAL | OE_CHECK_CHIOG)) {
      const auto r = oe::analyze(g->group, p);
      if (checks & OE_CHECK_COUNTS) {
        oe::Verdict v;
        v.passed = r.counts_agree();
        v.note("brute", std::to_string(r.count_brute));
        v.note("cyclic", std::to_string(r.count_cyclic));
        v.note("euler", std::to_string(r.count_euler));
        add("counts", v);
      }
      if (checks & OE_CHECK_FROBENIUS) add("frobenius", r.frobenius);
      if (checks & OE_CHECK_BROWN) add("brown", r.brown);
      if (checks & OE_CHECK_RADICAL) {
        add("radical_sum", r.radical_sum);
        add("radical_rows", r.radical_rows);
      }
      if (checks & OE_CHECK_CHIOG) add("chiOG", r.chiOG);
    }
    if (checks & OE_CHECK_STEINBERG) add("steinberg", oe::verify_steinberg(g->group, p));
    *passed = ok ? 1 : 0;
    if (detail_json) {
      nlohmann::ordered_json doc{{"group", g->spec}, {"prime", p}, {"checks", std::move(results)}};
      *detail_json = dup(doc.dump());
    }
  });
}

oe_status oe_verify_lie(const oe_group* g, uint32_t p, oe_format format, char** out, int* passed) {
  if (g == nullptr) return null_argument("group");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const auto r = oe::lie_report(g->group, p);
    auto text = oe::render(r, format_of(format));
    if (passed) *passed = r.all_passed() ? 1 : 0;
    *out = dup(text);
  });
}

oe_status oe_qidentity(oe_qid_family family, uint32_t m, int literal, oe_format format, char** out, int* passed) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const auto reading = literal ? oe::TwistedReading::kLiteral : oe::TwistedReading::kCorrected;
    oe::IdentityReport r;
    switch (family) {
      case OE_QID_A: r = oe::verify_witt_A(m); break;
      case OE_QID_B: r = oe::verify_witt_B(m); break;
      case OE_QID_2A_EVEN: r = oe::verify_twisted_A(m, oe::TwistedParity::kEven, reading); break;
      case OE_QID_2A_ODD: r = oe::verify_twisted_A(m, oe::TwistedParity::kOdd, reading); break;
      default: throw oe::Error(oe::ErrorCode::kInvalidArgument, "unknown identity family");
    }
    auto text = oe::render(r, format_of(format));
    if (passed) *passed = r.passed() ? 1 : 0;
    *out = dup(text);
  });
}

oe_status oe_egf_p_singular(uint32_t n, uint32_t p, char** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = dup(oe::egf_p_singular_symmetric(n, p).get_str()); });
}

oe_status oe_cross_char_class_count(uint32_t n, uint64_t q, uint32_t p, char** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = dup(oe::cross_char_class_count(n, q, p).get_str()); });
}

oe_status oe_count_p_singular_symmetric(uint32_t n, uint32_t p, uint64_t* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = oe::count_p_singular_permutations(n, p); });
}

size_t oe_catalog_size(void) { return oe::standard_catalog().size(); }

const char* oe_catalog_entry(size_t i) {
  const auto& c = oe::standard_catalog();
  return i < c.size() ? c[i].c_str() : nullptr;
}

oe_status oe_catalog_order(const char* spec, uint64_t* out) {
  if (spec == nullptr) return null_argument("spec");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = oe::catalog_order(spec); });
}

}  // extern "C"
