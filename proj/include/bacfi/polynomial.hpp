#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bacfi/bigint.hpp"

namespace bacfi {

/// Dense univariate polynomial over Z, coefficients lowest degree first.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients
/// and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial monomial(const BigInt& c, int degree);
  static IntPolynomial x_minus(const BigInt& root);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  BigInt coeff(int i) const;
  const BigInt& leading() const { return c_.back(); }

  BigInt eval(const BigInt& x) const;
  /// Sign of p(x) for rational x, evaluated without forming fractions.
  int sign_at(const Rational& x) const;
  double eval_approx(double x) const;

  IntPolynomial derivative() const;
  /// x^deg * p(1/x); the degree drops when p(0) = 0.
  IntPolynomial reversed() const;
  bool is_reciprocal() const;
  bool is_antireciprocal() const;

  BigInt content() const;
  /// Divided by its content, with positive leading coefficient.
  IntPolynomial primitive() const;
  IntPolynomial operator-() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& k, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// "x^4 - x^3 - x^2 - x + 1"
  std::string to_string(char var = 'x') const;
  std::vector<std::string> coeff_strings() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b. b must be nonzero.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Exact quotient a / b over Z; throws std::domain_error if b does not divide a.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

/// Division with remainder when b is monic (or divides every step exactly).
std::pair<IntPolynomial, IntPolynomial> divide_monic(const IntPolynomial& a, const IntPolynomial& b);

bool divides(const IntPolynomial& b, const IntPolynomial& a);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// p / gcd(p, p'), primitive.
IntPolynomial square_free_part(const IntPolynomial& p);

/// The m-th cyclotomic polynomial.
IntPolynomial cyclotomic(int m);

IntPolynomial parse_coefficients(const std::string& csv);

}  // namespace bacfi
