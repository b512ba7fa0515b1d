#pragma once

#include <complex>
#include <vector>

#include "bacfi/polynomial.hpp"

namespace bacfi {

using Complex = std::complex<long double>;

/// All complex roots by Aberth-Ehrlich simultaneous iteration in long double.
/// Used as an independent floating-point cross-check of the exact counts.
/// Throws NonConvergence when the iteration stalls.
std::vector<Complex> numeric_roots(const IntPolynomial& p, long double tol = 1e-12L, int max_iter = 2000);

struct NumericClassification {
  int real_count = 0;
  int unit_circle_count = 0;
  int other_count = 0;
};

/// Buckets roots with |Im| <= eps as real, then ||z| - 1| <= eps as unit circle.
NumericClassification classify_numeric(const std::vector<Complex>& roots, long double eps = 1e-6L);

}  // namespace bacfi
