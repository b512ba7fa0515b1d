#include <doctest.h>

#include "bacfi/error.hpp"
#include "bacfi/polynomial.hpp"

using namespace bacfi;

TEST_SUITE("polynomial") {

TEST_CASE("construction trims leading zeros") {
  const IntPolynomial p{1, 2, 0, 0};
  CHECK(p.degree() == 1);
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK(IntPolynomial{}.degree() == -1);
}

TEST_CASE("arithmetic and evaluation") {
  const IntPolynomial a{-1, 1};  // x - 1
  const IntPolynomial b{1, 1};   // x + 1
  CHECK(a * b == IntPolynomial{-1, 0, 1});
  CHECK(a + b == IntPolynomial{0, 2});
  CHECK(a - a == IntPolynomial{});
  CHECK((a * b).eval(BigInt(3)) == 8);
  CHECK(IntPolynomial{1, -14, 1}.sign_at(Rational(14)) == 1);
  CHECK(IntPolynomial{1, -14, 1}.sign_at(Rational(1)) == -1);
  CHECK(IntPolynomial{-1, 2}.sign_at(Rational(1, 2)) == 0);
}

TEST_CASE("derivative, reversal and reciprocity") {
  const IntPolynomial p{1, -1, -1, -1, 1};
  CHECK(p.derivative() == IntPolynomial{-1, -2, -3, 4});
  CHECK(p.is_reciprocal());
  CHECK(IntPolynomial{1, 2, 3}.reversed() == IntPolynomial{3, 2, 1});
  CHECK(IntPolynomial{0, 1, 2}.reversed() == IntPolynomial{2, 1});
  CHECK(IntPolynomial{-1, 0, 1}.is_antireciprocal());
}

TEST_CASE("gcd and square-free part") {
  const IntPolynomial a{-1, 1};
  const IntPolynomial b{2, 1};
  const IntPolynomial c{1, 1, 1};
  CHECK(gcd(a * a * b, a * c) == a);
  CHECK(gcd(IntPolynomial{2, 4}, IntPolynomial{3, 6}) == IntPolynomial{1, 2});
  CHECK(square_free_part(a * a * a * b) == a * b);
  CHECK(square_free_part(IntPolynomial{1, -4, 6, -4, 1}) == a);
}

TEST_CASE("division") {
  const IntPolynomial a{-1, 0, 0, 1};
  CHECK(exact_divide(a, IntPolynomial{-1, 1}) == IntPolynomial{1, 1, 1});
  CHECK_THROWS(exact_divide(a, IntPolynomial{1, 1}));
  CHECK(divides(IntPolynomial{2, 2}, IntPolynomial{-1, 0, 1}));
  CHECK(pseudo_remainder(IntPolynomial{1, 0, 1}, IntPolynomial{0, 2}) == IntPolynomial{4});
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPolynomial{-1, 1});
  CHECK(cyclotomic(4) == IntPolynomial{1, 0, 1});
  CHECK(cyclotomic(6) == IntPolynomial{1, -1, 1});
  CHECK(cyclotomic(12) == IntPolynomial{1, 0, -1, 0, 1});
}

TEST_CASE("printing and parsing") {
  CHECK(IntPolynomial{1, -1, -1, -1, 1}.to_string() == "x^4 - x^3 - x^2 - x + 1");
  CHECK(IntPolynomial{-3, 0, 2}.to_string() == "2x^2 - 3");
  CHECK(IntPolynomial{}.to_string() == "0");
  CHECK(parse_coefficients("1, -14, 1") == IntPolynomial{1, -14, 1});
  CHECK(parse_coefficients("123456789012345678901234567890").coeff(0) ==
        BigInt("123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_coefficients("1,,2"), Error);
  CHECK_THROWS_AS(parse_coefficients("1,x"), Error);
  try {
    parse_coefficients("0,0");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroPolynomial);
  }
}

}  // TEST_SUITE
