#include "core/polynomial.hpp"

#include "core/error.hpp"

namespace orbit_euler {

IntPolynomial::IntPolynomial(long c) : c_{Integer(c)} { trim(); }

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : c_(std::move(coefficients)) { trim(); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1, Integer(0));
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::negate_variable() const {
  auto v = c_;
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::substitute_power(std::size_t k) const {
  if (k == 0) return IntPolynomial(std::vector<Integer>{evaluate(1)});
  if (c_.empty()) return {};
  std::vector<Integer> v((c_.size() - 1) * k + 1, Integer(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Integer> v(c_.size() + o.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(v);
  trim();
  return *this;
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const auto& c = c_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Integer mag = neg ? Integer(-c) : c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? "-" : "+";
    }
    if (k == 0 || mag != 1) s += mag.get_str();
    if (k >= 1) s += "q";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

PolynomialDivision divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by the zero polynomial");
  const Integer lead = b.coefficients().back();
  if (lead != 1 && lead != -1) throw Error(ErrorCode::kInvalidArgument, "divisor is not monic up to sign");
  auto r = a.coefficients();
  const auto& d = b.coefficients();
  const std::size_t db = d.size() - 1;
  std::vector<Integer> quot(r.size() > db ? r.size() - db : 0, Integer(0));
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    const Integer f = r[k] * lead;  // lead is its own inverse
    quot[k - db] = f;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] -= f * d[i];
  }
  return PolynomialDivision{IntPolynomial(std::move(quot)), IntPolynomial(std::move(r))};
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  auto d = divide(a, b);
  if (!d.remainder.is_zero())
    throw Error(ErrorCode::kNonExactDivision,
                "(" + a.to_string() + ") / (" + b.to_string() + ") leaves " + d.remainder.to_string());
  return d.quotient;
}

}  // namespace orbit_euler
