#include "core/catalog.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <memory>
#include <utility>
#include <variant>

#include "core/permutation.hpp"

namespace orbit_euler {
namespace {

enum class Family { kSymmetric, kAlternating, kCyclic, kDihedral, kGeneralLinear, kSpecialLinear };

struct Atom {
  Family family;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  std::string text;
};

Error parse_error(std::string_view spec, const std::string& why) {
  return Error(ErrorCode::kParse, "cannot parse group spec '" + std::string(spec) + "': " + why);
}

std::uint32_t parse_number(std::string_view whole, std::string_view digits) {
  if (digits.empty()) throw parse_error(whole, "expected a number");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw parse_error(whole, "expected digits");
  if (digits.size() > 1 && digits[0] == '0') throw parse_error(whole, "leading zero");
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw parse_error(whole, "number out of range");
  return value;
}

Atom parse_atom(std::string_view whole, std::string_view s) {
  if (s.empty()) throw parse_error(whole, "empty factor");
  auto linear = [&](std::string_view prefix, Family family) -> Atom {
    auto rest = s.substr(prefix.size());
    if (rest.size() < 5 || rest.front() != '(' || rest.back() != ')')
      throw parse_error(whole, "expected " + std::string(prefix) + "(<n>,<q>)");
    rest = rest.substr(1, rest.size() - 2);
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw parse_error(whole, "missing ','");
    const auto n = parse_number(whole, rest.substr(0, comma));
    const auto q = parse_number(whole, rest.substr(comma + 1));
    if (n == 0) throw parse_error(whole, "matrix size must be positive");
    return Atom{family, n, q, std::string(s)};
  };
  if (s.starts_with("GL")) return linear("GL", Family::kGeneralLinear);
  if (s.starts_with("SL")) return linear("SL", Family::kSpecialLinear);
  const auto n = parse_number(whole, s.substr(1));
  switch (s.front()) {
    case 'S': return Atom{Family::kSymmetric, n, 0, std::string(s)};
    case 'A': return Atom{Family::kAlternating, n, 0, std::string(s)};
    case 'C':
      if (n == 0) throw parse_error(whole, "C0 is not a group");
      return Atom{Family::kCyclic, n, 0, std::string(s)};
    case 'D':
      if (n == 0 || n % 2 != 0) throw parse_error(whole, "dihedral order must be even and positive");
      return Atom{Family::kDihedral, n, 0, std::string(s)};
    default: throw parse_error(whole, "unknown family '" + std::string(1, s.front()) + "'");
  }
}

std::vector<Atom> parse_spec(std::string_view spec) {
  std::vector<Atom> atoms;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= spec.size(); ++i) {
    if (i < spec.size()) {
      const char c = spec[i];
      if (std::isspace(static_cast<unsigned char>(c))) throw parse_error(spec, "whitespace is not allowed");
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth < 0) throw parse_error(spec, "unbalanced parentheses");
      if (c != 'x' || depth != 0) continue;
    }
    atoms.push_back(parse_atom(spec, spec.substr(start, i - start)));
    start = i + 1;
  }
  if (depth != 0) throw parse_error(spec, "unbalanced parentheses");
  return atoms;
}

std::uint64_t factorial(std::uint32_t n) {
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) {
    f *= i;
    if (f > (1ull << 40)) return f;  // far above any cap; avoid overflow
  }
  return f;
}

std::uint64_t atom_order(const Atom& a) {
  switch (a.family) {
    case Family::kSymmetric: return factorial(a.n);
    case Family::kAlternating: return a.n < 2 ? 1 : factorial(a.n) / 2;
    case Family::kCyclic:
    case Family::kDihedral: return a.n;
    case Family::kGeneralLinear:
    case Family::kSpecialLinear: {
      const FiniteField field(a.q);  // validates q
      std::uint64_t qn = 1;
      for (std::uint32_t i = 0; i < a.n; ++i) {
        qn *= a.q;
        if (qn > (1ull << 40)) return qn;
      }
      std::uint64_t order = 1;
      std::uint64_t qi = 1;
      for (std::uint32_t i = 0; i < a.n; ++i) {
        order *= (qn - qi);
        qi *= a.q;
        if (order > (1ull << 40)) return order;
      }
      return a.family == Family::kSpecialLinear ? order / (a.q - 1) : order;
    }
  }
  return 0;
}

FiniteGroup build_cyclic(std::uint32_t n, std::size_t cap, const std::string& origin) {
  const std::vector<std::uint32_t> gens{1 % n};
  return generate_group<std::uint32_t>(
             gens, [n](std::uint32_t a, std::uint32_t b) { return (a + b) % n; }, cap, origin,
             [](const std::uint32_t& a) { return "r^" + std::to_string(a); })
      .group;
}

struct DihedralElement {
  std::uint32_t rotation;
  bool flip;
  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

struct DihedralHash {
  std::size_t operator()(const DihedralElement& d) const noexcept {
    return d.rotation * 2u + (d.flip ? 1u : 0u);
  }
};

FiniteGroup build_dihedral(std::uint32_t order, std::size_t cap, const std::string& origin) {
  const std::uint32_t m = order / 2;
  auto compose = [m](const DihedralElement& a, const DihedralElement& b) {
    const std::uint32_t r = a.flip ? (a.rotation + m - b.rotation) % m : (a.rotation + b.rotation) % m;
    return DihedralElement{r, a.flip != b.flip};
  };
  const std::vector<DihedralElement> gens{{1 % m, false}, {0, true}};
  return generate_group<DihedralElement, decltype(compose), DihedralHash>(
             gens, compose, cap, origin,
             [](const DihedralElement& d) {
               return "r^" + std::to_string(d.rotation) + (d.flip ? "s" : "");
             })
      .group;
}

FiniteGroup build_permutation_group(const std::vector<Permutation>& gens, std::size_t cap,
                                    const std::string& origin) {
  return generate_group<Permutation, decltype(&then), PermutationHash>(
             gens, &then, cap, origin, [](const Permutation& p) { return p.to_cycle_string(); })
      .group;
}

FiniteGroup build_symmetric(std::uint32_t n, std::size_t cap, const std::string& origin) {
  const std::uint32_t degree = std::max(n, 1u);
  std::vector<Permutation> gens;
  for (std::uint32_t i = 0; i + 1 < n; ++i) gens.push_back(Permutation::cycle(degree, {i, i + 1}));
  if (gens.empty()) gens.push_back(Permutation::identity(degree));
  return build_permutation_group(gens, cap, origin);
}

FiniteGroup build_alternating(std::uint32_t n, std::size_t cap, const std::string& origin) {
  const std::uint32_t degree = std::max(n, 1u);
  std::vector<Permutation> gens;
  for (std::uint32_t k = 2; k < n; ++k) gens.push_back(Permutation::cycle(degree, {0, 1, k}));
  if (gens.empty()) gens.push_back(Permutation::identity(degree));
  return build_permutation_group(gens, cap, origin);
}

FiniteGroup build_linear(std::uint32_t n, std::uint32_t q, bool special, std::size_t cap,
                         const std::string& origin) {
  auto field = std::make_shared<const FiniteField>(q);
  const auto gens = linear_group_generators(*field, n, special);
  const FiniteField* f = field.get();
  auto compose = [f](const FqMatrix& a, const FqMatrix& b) { return multiply(*f, a, b); };
  auto generated = generate_group<FqMatrix, decltype(compose), FqMatrixHash>(
      gens, compose, cap, origin, [f](const FqMatrix& m) { return to_string(*f, m); });
  auto realization = std::make_shared<MatrixRealization>();
  realization->field = field;
  realization->n = n;
  realization->special = special;
  realization->matrices = std::move(generated.elements);
  generated.group.attach_matrices(std::move(realization));
  return std::move(generated.group);
}

FiniteGroup build_atom(const Atom& a, std::size_t cap) {
  switch (a.family) {
    case Family::kSymmetric: return build_symmetric(a.n, cap, a.text);
    case Family::kAlternating: return build_alternating(a.n, cap, a.text);
    case Family::kCyclic: return build_cyclic(a.n, cap, a.text);
    case Family::kDihedral: return build_dihedral(a.n, cap, a.text);
    case Family::kGeneralLinear: return build_linear(a.n, a.q, false, cap, a.text);
    case Family::kSpecialLinear: return build_linear(a.n, a.q, true, cap, a.text);
  }
  throw Error(ErrorCode::kParse, "unreachable");
}

}  // namespace

std::size_t default_order_cap() {
  if (const char* env = std::getenv("ORBIT_EULER_CAP")) {
    std::size_t value = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc{} && ptr == s.data() + s.size() && value > 0)
      return std::min(value, kMaxGroupOrder);
  }
  return kMaxGroupOrder;
}

std::vector<FqMatrix> linear_group_generators(const FiniteField& field, std::uint32_t n,
                                              bool special) {
  std::vector<FqMatrix> gens;
  const auto w = field.primitive_element();
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    for (std::uint32_t k = 0; k < field.degree(); ++k) {
      const auto t = static_cast<std::uint8_t>(field.pow(w, k));
      auto upper = identity_matrix(n);
      upper.entries[i * n + i + 1] = t;
      auto lower = identity_matrix(n);
      lower.entries[(i + 1) * n + i] = t;
      gens.push_back(std::move(upper));
      gens.push_back(std::move(lower));
    }
  }
  if (!special) {
    auto d = identity_matrix(n);
    d.entries[0] = static_cast<std::uint8_t>(w);
    gens.push_back(std::move(d));
  }
  if (gens.empty()) gens.push_back(identity_matrix(n));
  return gens;
}

std::uint64_t catalog_order(std::string_view spec) {
  std::uint64_t order = 1;
  for (const auto& a : parse_spec(spec)) {
    order *= atom_order(a);
    if (order > (1ull << 40)) return order;
  }
  return order;
}

FiniteGroup catalog_group(std::string_view spec, std::size_t cap) {
  cap = std::min(cap, kMaxGroupOrder);
  const auto atoms = parse_spec(spec);
  const auto expected = catalog_order(spec);
  if (expected > cap)
    throw Error(ErrorCode::kCapExceeded, std::string(spec) + ": order " + std::to_string(expected) +
                                             " exceeds cap " + std::to_string(cap));
  auto group = build_atom(atoms.front(), cap);
  for (std::size_t i = 1; i < atoms.size(); ++i)
    group = direct_product(group, build_atom(atoms[i], cap), cap);
  if (group.order() != expected)
    throw Error(ErrorCode::kInconsistent, std::string(spec) + ": built order " +
                                              std::to_string(group.order()) + ", expected " +
                                              std::to_string(expected));
  return group;
}

const std::vector<std::string>& standard_catalog() {
  static const std::vector<std::string> list{
      "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C16",
      "C2xC2", "C2xC4", "C3xC3", "C2xC2xC2", "C4xC4", "C2xC6", "C5xC5", "C3xC3xC3",
      "D4", "D6", "D8", "D10", "D12", "D14", "D16", "D18", "D20", "D24",
      "S1", "S2", "S3", "S4", "S5",
      "A3", "A4", "A5", "A6",
      "GL(1,4)", "GL(2,2)", "GL(2,3)", "GL(2,4)", "GL(3,2)",
      "SL(2,3)", "SL(2,4)", "SL(2,5)", "SL(2,7)",
      "S3xC2", "S3xC3", "S3xS3", "C6xS3", "D8xC2", "D8xS3", "D8xD8",
      "A4xC2", "A4xC3", "A4xA4", "S4xC2", "S4xC3", "S4xS3", "S3xS3xC2",
      "A5xC2", "A5xC3", "S5xC2", "S5xC3",
      "SL(2,3)xC2", "GL(2,3)xC2", "GL(3,2)xC2", "D10xC5",
  };
  return list;
}

}  // namespace orbit_euler
