#include "bacfi/int_matrix.hpp"

#include <stdexcept>

namespace bacfi {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long long v : row) a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

BigInt IntMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
  BigInt t = 0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

BigInt IntMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  BigInt prev = 1;
  int sgn = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (m(r, k) != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      sgn = -sgn;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sgn * m(n - 1, n - 1);
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimensions do not match");
  IntMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

std::vector<std::vector<std::string>> IntMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[r].push_back((*this)(r, c).str());
  return out;
}

IntPolynomial char_poly(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const int n = m.rows();
  // Berkowitz: v holds the coefficients (highest degree first) of the
  // characteristic polynomial of the leading r x r block.
  std::vector<BigInt> v{BigInt(1)};
  for (int r = 0; r < n; ++r) {
    // Toeplitz column for the bordered block: [1, -a, -R C, -R A C, ...]
    const BigInt a = m(r, r);
    std::vector<BigInt> col(r), row(r);
    for (int i = 0; i < r; ++i) {
      col[i] = m(i, r);
      row[i] = m(r, i);
    }
    std::vector<BigInt> t(r + 2);
    t[0] = 1;
    t[1] = -a;
    std::vector<BigInt> x = col;
    for (int k = 2; k <= r + 1; ++k) {
      BigInt dot = 0;
      for (int i = 0; i < r; ++i) dot += row[i] * x[i];
      t[k] = -dot;
      if (k == r + 1) break;
      std::vector<BigInt> next(r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) next[i] += m(i, j) * x[j];
      x = std::move(next);
    }
    std::vector<BigInt> nv(r + 2);
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= std::min(i, r); ++j) {
        if (i - j < r + 2) nv[i] += t[i - j] * v[j];
      }
    v = std::move(nv);
  }
  std::vector<BigInt> low_first(v.rbegin(), v.rend());
  return IntPolynomial(std::move(low_first));
}

}  // namespace bacfi
