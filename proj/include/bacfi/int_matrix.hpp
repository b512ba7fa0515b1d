#pragma once

#include <string>
#include <vector>

#include "bacfi/bigint.hpp"
#include "bacfi/polynomial.hpp"

namespace bacfi {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const BigInt& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  BigInt trace() const;
  /// Fraction-free Bareiss elimination.
  BigInt determinant() const;
  IntMatrix transposed() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// Rows as decimal strings, for reports.
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> a_;
};

/// det(xI - M) by the division-free Berkowitz algorithm.
IntPolynomial char_poly(const IntMatrix& m);

}  // namespace bacfi
