#include "core/linear.hpp"

#include "core/error.hpp"

namespace orbit_euler {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::kInvalidArgument, "dimension mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(at(r, c)) != 0) acc += at(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::kInvalidArgument, "dimension mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(a.at(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

Rational WeightVector::sum() const {
  Rational s = 0;
  for (const auto& v : values) s += v;
  return s;
}

std::optional<LinearSolution> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  if (b.size() != n) throw Error(ErrorCode::kInvalidArgument, "dimension mismatch");

  // Augmented [A | b], reduced to row echelon form.
  RationalMatrix aug(n, m + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, m) = b[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && sgn(aug.at(piv, col)) == 0) ++piv;
    if (piv == n) continue;
    if (piv != row)
      for (std::size_t c = 0; c <= m; ++c) std::swap(aug.at(piv, c), aug.at(row, c));
    const Rational inv = 1 / aug.at(row, col);
    for (std::size_t c = col; c <= m; ++c) aug.at(row, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || sgn(aug.at(r, col)) == 0) continue;
      const Rational f = aug.at(r, col);
      for (std::size_t c = col; c <= m; ++c) aug.at(r, c) -= f * aug.at(row, c);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < n; ++r)
    if (sgn(aug.at(r, m)) != 0) return std::nullopt;

  LinearSolution sol;
  sol.x.assign(m, Rational(0));
  sol.rank = pivot_col.size();
  for (std::size_t r = 0; r < pivot_col.size(); ++r) sol.x[pivot_col[r]] = aug.at(r, m);
  return sol;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  if (!a.square()) return std::nullopt;
  const std::size_t n = a.rows();
  RationalMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n, Rational(0));
    e[j] = 1;
    auto sol = solve(a, e);
    if (!sol || sol->rank < n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) inv.at(i, j) = sol->x[i];
  }
  return inv;
}

namespace {

WeightVector solve_for_ones(const RationalMatrix& zeta, WeightSide side) {
  if (!zeta.square()) throw Error(ErrorCode::kInvalidArgument, "zeta matrix must be square");
  const std::vector<Rational> ones(zeta.rows(), Rational(1));
  auto sol = solve(zeta, ones);
  if (!sol) {
    throw Error(ErrorCode::kNoWeighting,
                side == WeightSide::kWeighting ? "matrix admits no weighting"
                                               : "matrix admits no coweighting");
  }
  if (zeta.apply(sol->x) != ones)
    throw Error(ErrorCode::kInconsistent, "weighting failed exact re-multiplication");
  return WeightVector{std::move(sol->x), side, sol->rank == zeta.cols()};
}

}  // namespace

WeightVector weighting(const RationalMatrix& zeta) {
  return solve_for_ones(zeta, WeightSide::kWeighting);
}

WeightVector coweighting(const RationalMatrix& zeta) {
  return solve_for_ones(zeta.transpose(), WeightSide::kCoweighting);
}

Rational euler_characteristic(const RationalMatrix& zeta) {
  std::optional<WeightVector> w;
  std::optional<WeightVector> cw;
  try {
    w = weighting(zeta);
    cw = coweighting(zeta);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoWeighting) throw;
    throw Error(ErrorCode::kNoEulerCharacteristic, e.what());
  }
  const Rational chi = w->sum();
  if (cw->sum() != chi)
    throw Error(ErrorCode::kInconsistent, "weighting and coweighting sums differ");
  if (w->unique) {
    const auto inv = inverse(zeta);
    Rational total = 0;
    for (std::size_t r = 0; r < inv->rows(); ++r)
      for (std::size_t c = 0; c < inv->cols(); ++c) total += inv->at(r, c);
    if (total != chi) throw Error(ErrorCode::kInconsistent, "inverse entry sum differs from chi");
  }
  return chi;
}

}  // namespace orbit_euler
