#include "core/report.hpp"

#include <sstream>

#include "core/error.hpp"

namespace orbit_euler {
namespace {

using json = nlohmann::ordered_json;

json rational_array(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json table_json(const ClassTable& t) {
  json a = json::array();
  for (const auto& row : t.entries) a.push_back(row);
  return a;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

std::string row_string(const std::vector<std::uint64_t>& row) {
  std::vector<std::string> parts;
  for (auto x : row) parts.push_back(std::to_string(x));
  return join(parts, " ");
}

std::string rationals_string(const std::vector<Rational>& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(to_string(x));
  return join(parts, " ");
}

// Right-aligned columns.
void print_table(std::ostream& os, const std::vector<std::vector<std::uint64_t>>& rows, const char* indent) {
  std::size_t w = 1;
  for (const auto& r : rows)
    for (auto x : r) w = std::max(w, std::to_string(x).size());
  for (const auto& r : rows) {
    os << indent;
    for (std::size_t j = 0; j < r.size(); ++j) {
      const auto s = std::to_string(r[j]);
      os << (j ? " " : "") << std::string(w - s.size(), ' ') << s;
    }
    os << '\n';
  }
}

void print_verdict(std::ostream& os, const std::string& name, const Verdict& v) {
  os << "  " << name << ": " << (v.passed ? "pass" : "FAIL") << '\n';
  if (v.passed) return;
  for (const auto& [k, val] : v.witnesses) os << "    " << k << " = " << val << '\n';
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

Format parse_format(std::string_view s) {
  if (s == "text") return Format::kText;
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  throw Error(ErrorCode::kParse, "unknown format '" + std::string(s) + "'");
}

json to_json(const Verdict& v) {
  json w = json::array();
  for (const auto& [k, val] : v.witnesses) w.push_back(json{{"name", k}, {"value", val}});
  return json{{"passed", v.passed}, {"witnesses", std::move(w)}};
}

json to_json(const IntPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.get_str());
  return a;
}

json to_json(const PSingularReport& r) {
  json classes = json::array();
  for (const auto& c : r.classes)
    classes.push_back(json{{"order", c.cls.representative.order()},
                           {"length", c.cls.length()},
                           {"normalizer_order", c.normalizer_order},
                           {"chi_tilde_quotient", to_string(c.chi_tilde_quotient)}});
  return json{
      {"group", r.group},
      {"prime", r.prime},
      {"order", r.order},
      {"p_part", r.p_part},
      {"counts", {{"brute", r.count_brute}, {"cyclic", r.count_cyclic}, {"euler", r.count_euler}}},
      {"classes", std::move(classes)},
      {"tom", table_json(r.tom)},
      {"modified_tom", table_json(r.modified_tom)},
      {"weightings", {{"tom", rational_array(r.weighting_tom)}, {"modified", rational_array(r.weighting_modified)}}},
      {"chi_tom", to_string(r.chi_tom)},
      {"verdicts",
       {{"frobenius", to_json(r.frobenius)},
        {"brown", to_json(r.brown)},
        {"radical_sum", to_json(r.radical_sum)},
        {"radical_rows", to_json(r.radical_rows)},
        {"chiOG", to_json(r.chiOG)}}},
  };
}

json to_json(const LieReport& r) {
  json par = json::array();
  for (const auto& p : r.parabolics) {
    json j = json::array();
    for (std::uint32_t i = 0; i < 32; ++i)
      if (p.J >> i & 1u) j.push_back(i + 1);
    par.push_back(json{{"J", std::move(j)},
                       {"order_P", p.order_P},
                       {"order_U", p.order_U},
                       {"order_L", p.order_L},
                       {"levi_p_part", p.levi_p_part}});
  }
  json verdicts = json::object();
  for (const auto& [name, v] : r.verdicts) verdicts[name] = to_json(v);
  return json{{"group", r.group}, {"prime", r.prime}, {"parabolics", std::move(par)}, {"verdicts", std::move(verdicts)}};
}

json to_json(const IdentityReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"name", c.name},
                          {"holds", c.holds()},
                          {"informational", c.informational},
                          {"lhs", to_json(c.lhs)},
                          {"rhs", to_json(c.rhs)}});
  return json{{"family", r.family}, {"m", r.m}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

std::string render(const PSingularReport& r, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::kJson:
      os << to_json(r).dump(2) << '\n';
      break;
    case Format::kCsv: {
      os << "group,prime,order,p_part,count_brute,count_cyclic,count_euler,class,class_order,length,"
            "normalizer_order,chi_tilde_quotient,weight_tom,weight_modified,tom_row,modified_tom_row\n";
      for (std::size_t i = 0; i < r.classes.size(); ++i) {
        const auto& c = r.classes[i];
        os << csv_field(r.group) << ',' << r.prime << ',' << r.order << ',' << r.p_part << ',' << r.count_brute
           << ',' << r.count_cyclic << ',' << r.count_euler << ',' << i << ',' << c.cls.representative.order()
           << ',' << c.cls.length() << ',' << c.normalizer_order << ',' << to_string(c.chi_tilde_quotient) << ','
           << to_string(r.weighting_tom[i]) << ',' << to_string(r.weighting_modified[i]) << ','
           << row_string(r.tom.entries[i]) << ',' << row_string(r.modified_tom.entries[i]) << '\n';
      }
      break;
    }
    case Format::kText: {
      os << "group " << r.group << ", order " << r.order << ", p = " << r.prime << ", |G|_p = " << r.p_part << '\n';
      os << "p-singular elements: brute " << r.count_brute << ", cyclic " << r.count_cyclic << ", euler "
         << r.count_euler << '\n';
      os << "p-radical classes:\n";
      os << "   #  order  length  |N(K)|  chi~(S(N(K)/K))\n";
      for (std::size_t i = 0; i < r.classes.size(); ++i) {
        const auto& c = r.classes[i];
        char buf[96];
        std::snprintf(buf, sizeof buf, "  %2zu  %5zu  %6zu  %6zu  ", i, c.cls.representative.order(),
                      c.cls.length(), c.normalizer_order);
        os << buf << to_string(c.chi_tilde_quotient) << '\n';
      }
      os << "table of marks:\n";
      print_table(os, r.tom.entries, "  ");
      os << "modified table of marks:\n";
      print_table(os, r.modified_tom.entries, "  ");
      os << "weighting (marks): " << rationals_string(r.weighting_tom) << '\n';
      os << "weighting (modified): " << rationals_string(r.weighting_modified) << '\n';
      os << "chi(marks) = " << to_string(r.chi_tom) << '\n';
      os << "verdicts:\n";
      print_verdict(os, "frobenius", r.frobenius);
      print_verdict(os, "brown", r.brown);
      print_verdict(os, "radical_sum", r.radical_sum);
      print_verdict(os, "radical_rows", r.radical_rows);
      print_verdict(os, "chiOG", r.chiOG);
      break;
    }
  }
  return os.str();
}

std::string render(const LieReport& r, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::kJson:
      os << to_json(r).dump(2) << '\n';
      break;
    case Format::kCsv:
      os << "group,prime,J,order_P,order_U,order_L,levi_p_part\n";
      for (const auto& p : r.parabolics) {
        std::vector<std::string> roots;
        for (std::uint32_t i = 0; i < 32; ++i)
          if (p.J >> i & 1u) roots.push_back(std::to_string(i + 1));
        os << csv_field(r.group) << ',' << r.prime << ',' << join(roots, " ") << ',' << p.order_P << ','
           << p.order_U << ',' << p.order_L << ',' << p.levi_p_part << '\n';
      }
      break;
    case Format::kText: {
      os << "group " << r.group << ", p = " << r.prime << '\n';
      os << "parabolics:\n";
      for (const auto& p : r.parabolics) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "  |P| = %zu, |U| = %zu, |L| = %zu, |L|_p = %llu", p.order_P, p.order_U,
                      p.order_L, static_cast<unsigned long long>(p.levi_p_part));
        os << "  J = " << root_set_name(p.J, 31) << buf << '\n';
      }
      os << "verdicts:\n";
      for (const auto& [name, v] : r.verdicts) print_verdict(os, name, v);
      break;
    }
  }
  return os.str();
}

std::string render(const IdentityReport& r, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::kJson:
      os << to_json(r).dump(2) << '\n';
      break;
    case Format::kCsv:
      os << "family,m,check,holds,informational,lhs,rhs\n";
      for (const auto& c : r.checks)
        os << csv_field(r.family) << ',' << r.m << ',' << csv_field(c.name) << ',' << (c.holds() ? "true" : "false")
           << ',' << (c.informational ? "true" : "false") << ',' << csv_field(c.lhs.to_string()) << ','
           << csv_field(c.rhs.to_string()) << '\n';
      break;
    case Format::kText:
      os << r.family << " m=" << r.m << ": " << (r.passed() ? "pass" : "FAIL") << '\n';
      for (const auto& c : r.checks) {
        if (c.holds()) continue;
        os << "  " << c.name << (c.informational ? " (informational)" : "") << '\n';
        os << "    lhs = " << c.lhs.to_string() << '\n';
        os << "    rhs = " << c.rhs.to_string() << '\n';
      }
      break;
  }
  return os.str();
}

}  // namespace orbit_euler
