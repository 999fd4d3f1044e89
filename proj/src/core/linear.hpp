#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "core/rational.hpp"

namespace orbit_euler {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  template <class Int>
  static RationalMatrix from_integers(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

template <class Int>
RationalMatrix RationalMatrix::from_integers(const std::vector<std::vector<Int>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(Integer(std::to_string(rows[i][j])));
  return m;
}

enum class WeightSide { kWeighting, kCoweighting };

struct WeightVector {
  std::vector<Rational> values;
  WeightSide side = WeightSide::kWeighting;
  bool unique = true;  // false when the matrix is singular

  Rational sum() const;
};

// Exact solution of A x = b by fraction Gaussian elimination. The pivot is
// the first nonzero entry in the column; free variables are set to zero.
// Returns nullopt when the system is inconsistent.
struct LinearSolution {
  std::vector<Rational> x;
  std::size_t rank = 0;
};
std::optional<LinearSolution> solve(const RationalMatrix& a, const std::vector<Rational>& b);

std::optional<RationalMatrix> inverse(const RationalMatrix& a);

// zeta * k = (1, ..., 1). Throws NoWeighting when inconsistent. The result
// is re-multiplied and compared exactly before returning.
WeightVector weighting(const RationalMatrix& zeta);
// k^T * zeta = (1, ..., 1).
WeightVector coweighting(const RationalMatrix& zeta);

// Coordinate sum of a weighting; requires both a weighting and a coweighting
// (throws NoEulerCharacteristic otherwise). The coweighting sum and, for
// invertible zeta, the entry sum of the inverse are checked to agree.
Rational euler_characteristic(const RationalMatrix& zeta);

}  // namespace orbit_euler
