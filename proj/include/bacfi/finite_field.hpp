#pragma once

#include <cstdint>
#include <vector>

#include "bacfi/polynomial.hpp"

namespace bacfi::gf {

/// Polynomial over Z/p, coefficients lowest degree first, no trailing zeros.
using Poly = std::vector<std::int64_t>;

Poly reduce(const IntPolynomial& f, std::int64_t p);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p);
Poly rem(Poly a, const Poly& b, std::int64_t p);
Poly gcd(Poly a, Poly b, std::int64_t p);
Poly derivative(const Poly& a, std::int64_t p);

/// True when f mod p keeps its degree and is square-free.
bool good_reduction(const IntPolynomial& f, std::int64_t p);

/// Rabin's test. Requires good reduction.
bool irreducible(const Poly& f, std::int64_t p);

/// Degrees of the irreducible factors of a square-free f mod p (distinct
/// degree factorisation), sorted.
std::vector<int> factor_degrees(const Poly& f, std::int64_t p);

std::vector<int> small_primes(int limit);

}  // namespace bacfi::gf
