#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bacfi/bigint.hpp"
#include "bacfi/polynomial.hpp"

namespace bacfi {

/// Open interval (lo, hi) holding exactly one real root, or the exact root
/// when lo == hi.
struct RootInterval {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
};

/// Sturm sequence with sign-corrected, primitive pseudo-remainders.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p);

/// Number of distinct real roots in (a, b] of a square-free p.
int count_roots(const std::vector<IntPolynomial>& chain, const Rational& a, const Rational& b);
int count_real_roots(const IntPolynomial& p);

/// One isolating interval per distinct real root, in increasing order. The
/// polynomial is reduced to its square-free part first.
std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p);

/// Bisect until the width is at most `width` (exact roots stay degenerate).
RootInterval refine(const IntPolynomial& square_free, RootInterval iv, const Rational& width);

/// g(x) = x^m q(x + 1/x) for palindromic g of degree 2m.
IntPolynomial chebyshev_reduce(const IntPolynomial& palindromic);
IntPolynomial chebyshev_expand(const IntPolynomial& q);

struct Irreducibility {
  enum class Status { Certified, Unknown, Reducible };
  Status status = Status::Unknown;
  /// A prime modulo which p stays irreducible (the usual certificate).
  std::optional<int> prime;
  /// Primes whose factorisation degree patterns jointly rule out every
  /// proper factor degree, when no single prime suffices.
  std::vector<int> sieve_primes;
  std::string method;  // "mod-p", "degree-sieve", "linear", "split" or ""
};

struct RootClassification {
  int degree = 0;  // of the square-free part
  int real_count = 0;
  int unit_circle_count = 0;  // non-real roots of modulus one
  int other_count = 0;
  bool reciprocal = false;
  bool square_free_input = true;
  std::optional<RootInterval> largest_real_root;
  Irreducibility irreducibility;
};

/// Exact root-location counts. x = +-1 are counted as real roots.
RootClassification classify_roots(const IntPolynomial& p,
                                  const Rational& enclosure_width = Rational(1, 1000000));

struct ExclusionVerdict {
  bool no_power_thurston = false;
  bool no_power_penner = false;
  bool certified = false;  // irreducibility certified, so the counts describe the minimal polynomial
  RootClassification classification;
  std::string certainty() const { return certified ? "certified" : "conditional on irreducibility"; }
};

/// Galois-conjugate exclusion test for a candidate minimal polynomial of a
/// stretch factor. Throws NoRealRootGreaterThanOne.
ExclusionVerdict exclusion_verdict(const IntPolynomial& p);

struct FactorPiece {
  IntPolynomial factor;
  std::string kind;  // "x", "x-1", "x+1", "cyclotomic", "reciprocal", "non-reciprocal"
  RootClassification classification;
};

/// Splits the square-free part of p by gcd/reversal tricks and cyclotomic
/// division. Not a full factorisation.
std::vector<FactorPiece> split_factors(const IntPolynomial& p);

/// Index into split_factors' output of the piece holding the largest real
/// root, if any root exceeds one.
std::optional<std::size_t> stretch_factor_piece(const std::vector<FactorPiece>& pieces);

}  // namespace bacfi
