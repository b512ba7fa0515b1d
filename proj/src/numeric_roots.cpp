#include "bacfi/numeric_roots.hpp"

#include <cmath>
#include <numbers>

#include "bacfi/error.hpp"

namespace bacfi {

std::vector<Complex> numeric_roots(const IntPolynomial& p, long double tol, int max_iter) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "no roots for the zero polynomial");
  const int n = p.degree();
  if (n < 1) return {};

  std::vector<long double> a(n + 1);
  for (int i = 0; i <= n; ++i) a[i] = p.coeffs()[i].convert_to<long double>() / p.leading().convert_to<long double>();

  auto eval = [&](Complex z, Complex& dp) {
    Complex v = 1.0L;
    dp = 0.0L;
    for (int i = n - 1; i >= 0; --i) {
      dp = dp * z + v;
      v = v * z + a[i];
    }
    return v;
  };

  // initial points on a circle sized by the Fujiwara bound, slightly rotated
  long double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::pow(std::abs(a[i]), 1.0L / (n - i)));
  radius = std::max(2 * radius, 1.0L);
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) {
    const long double t = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[k] = std::polar(radius, t);
  }

  for (int iter = 0; iter < max_iter; ++iter) {
    long double biggest_step = 0;
    for (int k = 0; k < n; ++k) {
      Complex dp;
      const Complex v = eval(z[k], dp);
      if (std::abs(v) == 0) continue;
      const Complex ratio = v / dp;
      Complex repulsion = 0.0L;
      for (int j = 0; j < n; ++j)
        if (j != k) repulsion += 1.0L / (z[k] - z[j]);
      const Complex step = ratio / (1.0L - ratio * repulsion);
      z[k] -= step;
      biggest_step = std::max(biggest_step, std::abs(step) / std::max(1.0L, std::abs(z[k])));
    }
    if (biggest_step < tol) return z;
  }
  throw Error(ErrorKind::NonConvergence, "Aberth iteration did not converge for " + p.to_string());
}

NumericClassification classify_numeric(const std::vector<Complex>& roots, long double eps) {
  NumericClassification c;
  for (const auto& r : roots) {
    if (std::abs(r.imag()) <= eps) ++c.real_count;
    else if (std::abs(std::abs(r) - 1.0L) <= eps) ++c.unit_circle_count;
    else ++c.other_count;
  }
  return c;
}

}  // namespace bacfi
