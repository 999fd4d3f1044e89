#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "orbit_euler.h"

#ifndef ORBIT_EULER_CONFIG_DIR
#define ORBIT_EULER_CONFIG_DIR "config"
#endif

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct ApiError {
  oe_status status;
  std::string message;
};

void check(oe_status s) {
  if (s != OE_OK) throw ApiError{s, std::string(oe_status_name(s)) + ": " + oe_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  oe_string_free(s);
  return out;
}

struct Group {
  oe_group* g = nullptr;
  Group(const std::string& spec, size_t cap) { check(oe_group_create(spec.c_str(), cap, &g)); }
  ~Group() { oe_group_destroy(g); }
  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;
};

oe_format parse_format(const std::string& s) {
  if (s == "text") return OE_FORMAT_TEXT;
  if (s == "json") return OE_FORMAT_JSON;
  if (s == "csv") return OE_FORMAT_CSV;
  throw ApiError{OE_PARSE_ERROR, "unknown format '" + s + "'"};
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(static_cast<std::uint32_t>(d));
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

std::uint32_t smallest_prime_factor(std::uint64_t n) { return n < 2 ? 0 : prime_divisors(n).front(); }

void validate_primes(const std::vector<std::uint32_t>& ps) {
  for (auto p : ps)
    if (!is_prime(p)) throw ApiError{OE_INVALID_ARGUMENT, std::to_string(p) + " is not prime"};
}

size_t effective_cap(size_t requested) {
  const size_t limit = oe_default_cap();
  if (requested == 0) return limit;
  if (requested > limit) throw ApiError{OE_INVALID_ARGUMENT, "cap above " + std::to_string(limit)};
  return requested;
}

// "GL(3,2)" -> 2 ; "SL(2,9)" -> 3
std::optional<std::uint32_t> lie_characteristic(const std::string& spec) {
  const auto comma = spec.find(',');
  const auto close = spec.find(')');
  if (comma == std::string::npos || close == std::string::npos || close < comma) return std::nullopt;
  try {
    return smallest_prime_factor(std::stoull(spec.substr(comma + 1, close - comma - 1)));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// ---- expected-fail registry

struct ExpectedFailure {
  std::map<std::string, std::string> witnesses;
  std::string summary;
  std::string reason;
};

using Registry = std::map<std::tuple<std::string, std::uint32_t, std::string>, ExpectedFailure>;

Registry load_registry(const std::string& path) {
  Registry reg;
  std::ifstream in(path);
  if (!in) throw ApiError{OE_PARSE_ERROR, "cannot open " + path};
  json doc;
  try {
    doc = json::parse(in);
    for (const auto& e : doc.at("expected_failures")) {
      ExpectedFailure f;
      if (e.contains("witnesses"))
        for (const auto& [k, v] : e["witnesses"].items()) f.witnesses[k] = v.get<std::string>();
      f.summary = e.value("summary", "");
      f.reason = e.value("reason", "");
      reg[{e.at("group").get<std::string>(), e.at("prime").get<std::uint32_t>(), e.at("check").get<std::string>()}] =
          std::move(f);
    }
  } catch (const json::exception& ex) {
    throw ApiError{OE_PARSE_ERROR, path + ": " + ex.what()};
  }
  return reg;
}

// ---- verify

enum class Status { kPass, kFail, kExpectedFail, kUnexpectedPass };

const char* status_name(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "FAIL";
    case Status::kExpectedFail: return "expected-fail";
    case Status::kUnexpectedPass: return "UNEXPECTED-PASS";
  }
  return "?";
}

struct Outcome {
  std::string group;
  std::uint32_t prime;
  std::string check;
  Status status;
  std::string summary;
  json witnesses;
};

bool witnesses_match(const json& w, const std::map<std::string, std::string>& expected) {
  for (const auto& [k, v] : expected) {
    bool found = false;
    for (const auto& item : w)
      if (item.at("name") == k && item.at("value") == v) found = true;
    if (!found) return false;
  }
  return true;
}

Outcome classify(const std::string& group, std::uint32_t p, const std::string& name, const json& verdict,
                 const Registry& reg) {
  Outcome o{group, p, name, Status::kPass, "", verdict.at("witnesses")};
  const bool passed = verdict.at("passed").get<bool>();
  const auto it = reg.find({group, p, name});
  if (it == reg.end()) {
    o.status = passed ? Status::kPass : Status::kFail;
  } else if (passed) {
    o.status = Status::kUnexpectedPass;
    o.summary = "registered expected failure passed";
  } else if (!witnesses_match(o.witnesses, it->second.witnesses)) {
    o.status = Status::kFail;
    o.summary = "expected failure with different witnesses";
  } else {
    o.status = Status::kExpectedFail;
    o.summary = it->second.summary;
  }
  return o;
}

std::string witness_line(const json& w) {
  std::string s;
  for (const auto& item : w) {
    if (!s.empty()) s += ", ";
    s += item.at("name").get<std::string>() + " = " + item.at("value").get<std::string>();
  }
  return s;
}

bool failing(Status s) { return s == Status::kFail || s == Status::kUnexpectedPass; }

void emit_outcomes(const std::vector<Outcome>& outs, oe_format fmt) {
  std::size_t pass = 0, fail = 0, xfail = 0;
  for (const auto& o : outs) {
    if (o.status == Status::kPass) ++pass;
    else if (o.status == Status::kExpectedFail) ++xfail;
    else ++fail;
  }
  if (fmt == OE_FORMAT_JSON) {
    json results = json::array();
    for (const auto& o : outs)
      results.push_back(json{{"group", o.group},
                             {"prime", o.prime},
                             {"check", o.check},
                             {"status", status_name(o.status)},
                             {"summary", o.summary},
                             {"witnesses", o.witnesses}});
    json doc{{"results", std::move(results)},
             {"summary", {{"pass", pass}, {"fail", fail}, {"expected_fail", xfail}}}};
    std::cout << doc.dump(2) << '\n';
    return;
  }
  if (fmt == OE_FORMAT_CSV) {
    std::cout << "group,prime,check,status,summary\n";
    for (const auto& o : outs)
      std::cout << '"' << o.group << "\"," << o.prime << ',' << o.check << ',' << status_name(o.status) << ",\""
                << o.summary << "\"\n";
    return;
  }
  std::string last;
  for (const auto& o : outs) {
    const auto key = o.group + " p=" + std::to_string(o.prime);
    if (key != last) {
      std::cout << key << '\n';
      last = key;
    }
    std::cout << "  " << o.check << ": " << status_name(o.status);
    if (!o.summary.empty()) std::cout << " (" << o.summary << ")";
    std::cout << '\n';
    if (o.status != Status::kPass) std::cout << "    " << witness_line(o.witnesses) << '\n';
  }
  std::cout << "summary: " << pass << " pass, " << fail << " fail, " << xfail << " expected-fail\n";
}

// ---- qid

struct QidRow {
  std::string name;
  bool passed;
  std::string detail;
};

int emit_qid(const std::vector<QidRow>& rows, const std::vector<std::string>& rendered, oe_format fmt) {
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.passed;
  if (fmt == OE_FORMAT_JSON) {
    json a = json::array();
    for (const auto& r : rendered) a.push_back(json::parse(r));
    for (const auto& r : rows)
      if (r.detail.size()) a.push_back(json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    std::cout << json{{"passed", ok}, {"results", std::move(a)}}.dump(2) << '\n';
  } else if (fmt == OE_FORMAT_CSV) {
    std::cout << "name,passed,detail\n";
    for (const auto& r : rows) std::cout << r.name << ',' << (r.passed ? "true" : "false") << ",\"" << r.detail << "\"\n";
  } else {
    for (const auto& r : rendered) std::cout << r;
    for (const auto& r : rows)
      if (!r.detail.empty()) std::cout << r.name << ": " << (r.passed ? "pass" : "FAIL") << "  " << r.detail << '\n';
    std::cout << (ok ? "all identities hold" : "identity failures") << '\n';
  }
  return ok ? kExitOk : kExitFailed;
}

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= limit; ++q) {
    const auto p = smallest_prime_factor(q);
    auto r = q;
    while (r % p == 0) r /= p;
    if (r == 1) out.push_back(q);
  }
  return out;
}

std::uint64_t gl_order(std::uint32_t n, std::uint64_t q, std::uint64_t stop) {
  std::uint64_t qn = 1;
  for (std::uint32_t i = 0; i < n; ++i) qn *= q;
  std::uint64_t order = 1, qi = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= q;
    if (order > stop) return stop + 1;
  }
  return order;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-singular counting and orbit-category Euler characteristics"};
  app.set_version_flag("--version", oe_version());
  app.require_subcommand(1);

  std::string format = "text";
  std::vector<std::uint32_t> primes;
  std::size_t cap = 0;

  auto* report = app.add_subcommand("report", "p-local report for one group");
  std::vector<std::string> report_specs;
  report->add_option("spec", report_specs, "group spec, e.g. S4, GL(3,2), D8xC2")->required();
  report->add_option("-p,--primes", primes, "primes (default: all dividing |G|)")->delimiter(',');
  report->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  report->add_option("--cap", cap, "order cap");

  auto* verify = app.add_subcommand("verify", "run verdict suites over groups");
  std::vector<std::string> verify_groups, lie_groups;
  std::uint64_t max_order = 0;
  bool steinberg = false;
  std::string registry_path = std::string(ORBIT_EULER_CONFIG_DIR) + "/expected_failures.json";
  verify->add_option("--group", verify_groups, "group specs (default: catalog)");
  verify->add_option("--max-order", max_order, "catalog filter");
  verify->add_option("-p,--primes", primes, "primes (default: all dividing |G|)")->delimiter(',');
  verify->add_flag("--steinberg", steinberg, "also check |G_p| = |G|_p^2");
  verify->add_option("--lie", lie_groups, "GL/SL specs for the parabolic suite");
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_option("--expected-failures", registry_path, "expected-fail registry");
  verify->add_option("--cap", cap, "order cap");

  auto* qid = app.add_subcommand("qid", "symbolic identity checks");
  std::string family;
  std::uint32_t m_max = 0, n_max = 8;
  bool literal = false;
  qid->add_option("family", family)
      ->required()
      ->check(CLI::IsMember({"A", "B", "2A-even", "2A-odd", "witt", "egf", "crosschar"}));
  qid->add_option("--m-max", m_max, "largest m (default 6, 4 for twisted)");
  qid->add_option("--n-max", n_max, "largest n for egf / crosschar");
  qid->add_option("-p,--primes", primes, "primes for egf / crosschar")->delimiter(',');
  qid->add_flag("--literal", literal, "as-displayed reading of the twisted identities");
  qid->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  qid->add_option("--cap", cap, "order cap for crosschar");

  auto* catalog = app.add_subcommand("catalog", "list catalog groups");
  catalog->add_option("--max-order", max_order);
  catalog->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    const auto fmt = parse_format(format);
    validate_primes(primes);

    if (*report) {
      cap = effective_cap(cap);
      bool ok = true;
      std::vector<std::string> outputs;
      for (const auto& spec : report_specs) {
        Group g(spec, cap);
        auto ps = primes.empty() ? prime_divisors(oe_group_order(g.g)) : primes;
        if (ps.empty()) ps.push_back(2);
        for (auto p : ps) {
          char* out = nullptr;
          int passed = 0;
          check(oe_report(g.g, p, fmt, &out, &passed));
          outputs.push_back(take(out));
          ok = ok && passed;
        }
      }
      if (fmt == OE_FORMAT_JSON && outputs.size() > 1) {
        json a = json::array();
        for (const auto& o : outputs) a.push_back(json::parse(o));
        std::cout << a.dump(2) << '\n';
      } else if (fmt == OE_FORMAT_CSV) {
        for (std::size_t i = 0; i < outputs.size(); ++i) {
          const auto& o = outputs[i];
          std::cout << (i == 0 ? o : o.substr(o.find('\n') + 1));
        }
      } else {
        for (std::size_t i = 0; i < outputs.size(); ++i) std::cout << (i ? "\n" : "") << outputs[i];
      }
      return ok ? kExitOk : kExitFailed;
    }

    if (*verify) {
      cap = effective_cap(cap);
      const auto registry = load_registry(registry_path);
      std::vector<Outcome> outcomes;
      const bool lie_only = !lie_groups.empty() && verify_groups.empty() && max_order == 0;
      std::vector<std::string> groups = verify_groups;
      if (groups.empty() && !lie_only) {
        const std::uint64_t limit = max_order ? max_order : cap;
        for (size_t i = 0; i < oe_catalog_size(); ++i) {
          std::uint64_t order = 0;
          check(oe_catalog_order(oe_catalog_entry(i), &order));
          if (order <= limit) groups.push_back(oe_catalog_entry(i));
        }
      }
      const unsigned checks = OE_CHECK_DEFAULT | (steinberg ? OE_CHECK_STEINBERG : 0u);
      for (const auto& spec : groups) {
        Group g(spec, cap);
        const auto divisors = prime_divisors(oe_group_order(g.g));
        std::vector<std::uint32_t> ps;
        for (auto p : primes.empty() ? divisors : primes)
          if (oe_group_order(g.g) % p == 0) ps.push_back(p);
        for (auto p : ps) {
          char* detail = nullptr;
          int passed = 0;
          check(oe_verify_group(g.g, p, checks, &passed, &detail));
          const auto doc = json::parse(take(detail));
          for (const auto& [name, v] : doc.at("checks").items())
            outcomes.push_back(classify(spec, p, name, v, registry));
        }
      }
      for (const auto& spec : lie_groups) {
        Group g(spec, cap);
        std::vector<std::uint32_t> ps = primes;
        if (ps.empty()) {
          const auto c = lie_characteristic(spec);
          if (!c) throw ApiError{OE_NOT_LIE_CATALOG, spec + " is not a GL/SL spec"};
          ps.push_back(*c);
        }
        for (auto p : ps) {
          char* out = nullptr;
          check(oe_verify_lie(g.g, p, OE_FORMAT_JSON, &out, nullptr));
          const auto doc = json::parse(take(out));
          for (const auto& [name, v] : doc.at("verdicts").items())
            outcomes.push_back(classify(spec, p, name, v, registry));
        }
      }
      emit_outcomes(outcomes, fmt);
      for (const auto& o : outcomes)
        if (failing(o.status)) return kExitFailed;
      return kExitOk;
    }

    if (*qid) {
      std::vector<QidRow> rows;
      std::vector<std::string> rendered;
      auto run_family = [&](oe_qid_family f, std::uint32_t first, std::uint32_t last) {
        for (std::uint32_t m = first; m <= last; ++m) {
          char* out = nullptr;
          int passed = 0;
          check(oe_qidentity(f, m, literal ? 1 : 0, fmt, &out, &passed));
          rendered.push_back(take(out));
          rows.push_back({"", passed != 0, ""});
        }
      };
      if (family == "A" || family == "witt") run_family(OE_QID_A, 1, m_max ? m_max : 6);
      if (family == "B" || family == "witt") run_family(OE_QID_B, 2, m_max ? m_max : 6);
      if (family == "2A-even") run_family(OE_QID_2A_EVEN, 1, m_max ? m_max : 4);
      if (family == "2A-odd") run_family(OE_QID_2A_ODD, 1, m_max ? m_max : 4);
      if (family == "egf") {
        const auto ps = primes.empty() ? std::vector<std::uint32_t>{2, 3, 5, 7} : primes;
        for (auto p : ps)
          for (std::uint32_t n = 1; n <= n_max; ++n) {
            char* coeff = nullptr;
            check(oe_egf_p_singular(n, p, &coeff));
            const auto egf = take(coeff);
            std::uint64_t brute = 0;
            check(oe_count_p_singular_symmetric(n, p, &brute));
            rows.push_back({"egf n=" + std::to_string(n) + " p=" + std::to_string(p), egf == std::to_string(brute),
                            "egf " + egf + ", brute " + std::to_string(brute)});
          }
      }
      if (family == "crosschar") {
        cap = effective_cap(cap);
        for (std::uint32_t n = 1; n <= n_max; ++n)
          for (auto q : prime_powers_up_to(cap + 1)) {
            const auto order = gl_order(n, q, cap);
            if (order > cap) continue;
            // GL(1,q) is cyclic of order q-1; larger n need the matrix group.
            const auto spec = n == 1 ? "C" + std::to_string(q - 1)
                                     : "GL(" + std::to_string(n) + "," + std::to_string(q) + ")";
            Group g(spec, cap);
            for (auto p : primes.empty() ? prime_divisors(order) : primes) {
              if (q % p == 0 || order % p != 0) continue;
              char* formula = nullptr;
              check(oe_cross_char_class_count(n, q, p, &formula));
              const auto f = take(formula);
              std::uint64_t brute = 0;
              check(oe_count_p_singular_classes(g.g, p, &brute));
              rows.push_back({"crosschar n=" + std::to_string(n) + " q=" + std::to_string(q) +
                                  " p=" + std::to_string(p),
                              f == std::to_string(brute), "formula " + f + ", brute " + std::to_string(brute) +
                                                              " (" + spec + ")"});
            }
          }
      }
      return emit_qid(rows, rendered, fmt);
    }

    if (*catalog) {
      json a = json::array();
      if (fmt == OE_FORMAT_CSV) std::cout << "spec,order\n";
      for (size_t i = 0; i < oe_catalog_size(); ++i) {
        std::uint64_t order = 0;
        check(oe_catalog_order(oe_catalog_entry(i), &order));
        if (max_order && order > max_order) continue;
        if (fmt == OE_FORMAT_JSON) a.push_back(json{{"spec", oe_catalog_entry(i)}, {"order", order}});
        else if (fmt == OE_FORMAT_CSV) std::cout << '"' << oe_catalog_entry(i) << "\"," << order << '\n';
        else std::printf("%-14s %6llu\n", oe_catalog_entry(i), static_cast<unsigned long long>(order));
      }
      if (fmt == OE_FORMAT_JSON) std::cout << a.dump(2) << '\n';
      return kExitOk;
    }
  } catch (const ApiError& e) {
    std::cerr << "orbit-euler: " << e.message << '\n';
    switch (e.status) {
      case OE_PARSE_ERROR:
      case OE_CAP_EXCEEDED:
      case OE_INVALID_ARGUMENT:
      case OE_NOT_LIE_CATALOG:
      case OE_P_DIVIDES_Q:
        return kExitUsage;
      default:
        return kExitFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "orbit-euler: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
