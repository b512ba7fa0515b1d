#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "bacfi/error.hpp"
#include "bacfi/finite_field.hpp"
#include "bacfi/numeric_roots.hpp"
#include "bacfi/roots.hpp"

using namespace bacfi;

namespace {

const IntPolynomial kPingPong{1, -4, -4, -4, -4, -4, -14, -4, -4, -4, -4, -4, 1};
const IntPolynomial kLehmerLike{1, -1, -1, -1, 1};

ErrorKind error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::MalformedDocument;
}

}  // namespace

TEST_SUITE("roots") {

TEST_CASE("isolation of the Example 2 polynomial") {
  const IntPolynomial p{1, -14, 1};
  const auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 2);
  const auto top = refine(p, roots.back(), Rational(1, 100));
  CHECK(top.lo > Rational(139, 10));
  CHECK(top.hi < Rational(14));
}

TEST_CASE("isolation of x^4 - x^3 - x^2 - x + 1") {
  const auto roots = isolate_real_roots(kLehmerLike);
  REQUIRE(roots.size() == 2);
  const auto top = refine(kLehmerLike, roots.back(), Rational(1, 100000));
  CHECK(top.lo > Rational(1722, 1000));
  CHECK(top.hi < Rational(17221, 10000));
}

TEST_CASE("no real roots, exact rational roots, and the zero polynomial") {
  CHECK(isolate_real_roots(IntPolynomial{1, 0, 1}).empty());
  const auto r = isolate_real_roots(IntPolynomial{-1, 0, 4});  // +-1/2
  REQUIRE(r.size() == 2);
  CHECK(refine(IntPolynomial{-1, 0, 4}, r[1], Rational(1, 1000)).lo <= Rational(1, 2));
  CHECK(error_of([] { isolate_real_roots(IntPolynomial{}); }) == ErrorKind::ZeroPolynomial);
}

TEST_CASE("isolating intervals are disjoint and sorted") {
  // (x-1)(x-2)(x-3)(x+5)(2x-1)
  IntPolynomial p{1};
  for (const auto& f : {IntPolynomial{-1, 1}, IntPolynomial{-2, 1}, IntPolynomial{-3, 1}, IntPolynomial{5, 1},
                        IntPolynomial{-1, 2}})
    p = p * f;
  const auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 5);
  for (std::size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1].hi <= roots[i].lo);
}

TEST_CASE("Chebyshev reduction is exact") {
  const IntPolynomial q = chebyshev_reduce(kPingPong);
  CHECK(q.degree() == 6);
  CHECK(chebyshev_expand(q) == kPingPong);
  CHECK(chebyshev_expand(chebyshev_reduce(kLehmerLike)) == kLehmerLike);
  CHECK(chebyshev_reduce(kLehmerLike) == IntPolynomial{-3, -1, 1});
}

TEST_CASE("classification of the reference polynomials") {
  const auto pp = classify_roots(kPingPong);
  CHECK(pp.real_count == 4);
  CHECK(pp.unit_circle_count == 4);
  CHECK(pp.other_count == 4);
  CHECK(pp.reciprocal);

  const auto lk = classify_roots(kLehmerLike);
  CHECK(lk.real_count == 2);
  CHECK(lk.unit_circle_count == 2);
  CHECK(lk.other_count == 0);

  const auto q = classify_roots(IntPolynomial{1, -3, 1});
  CHECK(q.real_count == 2);
  CHECK(q.unit_circle_count + q.other_count == 0);
}

TEST_CASE("roots at +-1 and zero are real") {
  // x (x - 1)(x + 1)(x^2 + 1)
  const IntPolynomial p = IntPolynomial{0, 1} * IntPolynomial{-1, 0, 1} * IntPolynomial{1, 0, 1};
  const auto c = classify_roots(p);
  CHECK(c.real_count == 3);
  CHECK(c.unit_circle_count == 2);
  CHECK(c.other_count == 0);
}

TEST_CASE("non-square-free input is reduced and flagged") {
  const IntPolynomial p = kLehmerLike * kLehmerLike;
  const auto c = classify_roots(p);
  CHECK_FALSE(c.square_free_input);
  CHECK(c.degree == 4);
  CHECK(c.real_count == 2);
  CHECK(c.irreducibility.status == Irreducibility::Status::Reducible);
}

TEST_CASE("classification is invariant under reversal") {
  for (const auto& p : {kPingPong, kLehmerLike, IntPolynomial{2, -7, 1, 3}, IntPolynomial{-1, 5, 0, 0, 2, 1}}) {
    const auto a = classify_roots(p);
    const auto b = classify_roots(p.reversed());
    CHECK(a.real_count == b.real_count);
    CHECK(a.unit_circle_count == b.unit_circle_count);
    CHECK(a.other_count == b.other_count);
  }
}

TEST_CASE("largest real root enclosure defaults to width 1e-6") {
  const auto c = classify_roots(kLehmerLike);
  REQUIRE(c.largest_real_root);
  CHECK(c.largest_real_root->width() <= Rational(1, 1000000));
  CHECK(c.largest_real_root->lo > Rational(1722, 1000));
}

TEST_CASE("exclusion verdicts") {
  const auto pp = exclusion_verdict(kPingPong);
  CHECK(pp.no_power_thurston);
  CHECK(pp.no_power_penner);
  CHECK(pp.certified);

  const auto two = exclusion_verdict(IntPolynomial{1, -14, 1});
  CHECK_FALSE(two.no_power_thurston);
  CHECK_FALSE(two.no_power_penner);

  const auto lk = exclusion_verdict(kLehmerLike);
  CHECK(lk.no_power_penner);
  CHECK_FALSE(lk.no_power_thurston);

  CHECK(error_of([] { exclusion_verdict(IntPolynomial{1, 0, 1}); }) == ErrorKind::NoRealRootGreaterThanOne);
  CHECK(error_of([] { exclusion_verdict(IntPolynomial{-1, 1}); }) == ErrorKind::NoRealRootGreaterThanOne);
}

TEST_CASE("irreducibility certificates") {
  const auto mod_p = classify_roots(kPingPong).irreducibility;
  CHECK(mod_p.status == Irreducibility::Status::Certified);
  CHECK(mod_p.method == "mod-p");
  REQUIRE(mod_p.prime);
  CHECK(gf::irreducible(gf::reduce(kPingPong, *mod_p.prime), *mod_p.prime));

  const auto single = classify_roots(IntPolynomial{1, -1, -1, -1, 1}).irreducibility;
  CHECK(single.method == "mod-p");
  REQUIRE(single.prime);
  CHECK(gf::irreducible(gf::reduce(IntPolynomial{1, -1, -1, -1, 1}, *single.prime), *single.prime));

  // Galois group A4: never irreducible modulo a prime, but the degree
  // patterns 1+3 and 2+2 rule out every proper factor.
  const IntPolynomial a4{12, 8, 0, 0, 1};
  const auto sieve = classify_roots(a4).irreducibility;
  CHECK(sieve.status == Irreducibility::Status::Certified);
  CHECK(sieve.method == "degree-sieve");
  CHECK(sieve.sieve_primes.size() >= 2);

  // x^4 + 1 splits modulo every prime
  CHECK(classify_roots(IntPolynomial{1, 0, 0, 0, 1}).irreducibility.status == Irreducibility::Status::Unknown);
}

TEST_CASE("finite field helpers") {
  CHECK(gf::irreducible(gf::reduce(IntPolynomial{1, 1, 0, 0, 1}, 2), 2));  // x^4 + x + 1
  CHECK_FALSE(gf::irreducible(gf::reduce(IntPolynomial{1, 0, 1}, 2), 2));
  CHECK(gf::factor_degrees(gf::reduce(IntPolynomial{-1, 0, 0, 0, 0, 0, 1}, 7), 7) ==
        std::vector<int>{1, 1, 1, 1, 1, 1});
  CHECK(gf::small_primes(20) == std::vector<int>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK_FALSE(gf::good_reduction(IntPolynomial{1, -14, 1}, 2));
}

TEST_CASE("factor splitting picks the factor of the stretch factor") {
  // cyclotomic * (x - 1) * Example 2 factor * a non-reciprocal cubic
  const IntPolynomial p =
      IntPolynomial{1, -1, 1} * IntPolynomial{-1, 1} * IntPolynomial{1, -14, 1} * IntPolynomial{-1, -1, 0, 1};
  const auto pieces = split_factors(p);
  const auto best = stretch_factor_piece(pieces);
  REQUIRE(best);
  CHECK(pieces[*best].factor == IntPolynomial{1, -14, 1});
  bool saw_cyclo = false;
  for (const auto& piece : pieces) saw_cyclo = saw_cyclo || piece.kind == "cyclotomic";
  CHECK(saw_cyclo);
  CHECK_FALSE(stretch_factor_piece(split_factors(IntPolynomial{1, 0, 1})).has_value());
}

TEST_CASE("numeric roots") {
  auto r = numeric_roots(IntPolynomial{1, -14, 1});
  std::sort(r.begin(), r.end(), [](auto a, auto b) { return a.real() < b.real(); });
  CHECK(std::abs(r[1].real() - (7 + 4 * std::sqrt(3.0L))) < 1e-9L);
  CHECK(std::abs(r[0].real() - (7 - 4 * std::sqrt(3.0L))) < 1e-9L);

  long double biggest = 0;
  for (const auto& z : numeric_roots(kLehmerLike)) biggest = std::max(biggest, std::abs(z));
  CHECK(std::abs(biggest - 1.72208L) < 1e-5L);

  const auto i = numeric_roots(IntPolynomial{1, 0, 1});
  REQUIRE(i.size() == 2);
  for (const auto& z : i) CHECK(std::abs(std::abs(z.imag()) - 1) < 1e-12L);

  const auto c = classify_numeric(numeric_roots(kPingPong));
  CHECK(c.real_count == 4);
  CHECK(c.unit_circle_count == 4);
  CHECK(c.other_count == 4);
}

TEST_CASE("numeric roots report non-convergence") {
  CHECK(error_of([] { numeric_roots(kPingPong, 1e-30L, 3); }) == ErrorKind::NonConvergence);
}

}  // TEST_SUITE
