#include <doctest.h>

#include <random>

#include "bacfi/builtin.hpp"
#include "bacfi/error.hpp"
#include "bacfi/homology.hpp"
#include "support/generators.hpp"

using namespace bacfi;

namespace {

IntPolynomial monodromy_char_poly(const BacfiSurface& s, std::optional<std::uint64_t> seed = std::nullopt) {
  return char_poly(h1_matrix(s, monodromy(s), seed).matrix);
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("the boundary maps compose to zero and H1 has rank 2g") {
  std::mt19937_64 rng(1);
  std::vector<BacfiSurface> surfaces{builtin::example2(), builtin::example3(3, 7), builtin::example4(3, 7),
                                     builtin::pingpong(3, 6, 16)};
  for (int i = 0; i < 40; ++i) surfaces.push_back(testing::random_surface(rng, 1 + i % 10));
  for (const auto& s : surfaces) {
    const ChainComplex cx = chain_complex(s);
    const IntMatrix zero = cx.boundary1 * cx.boundary2;
    for (int r = 0; r < zero.rows(); ++r)
      for (int c = 0; c < zero.cols(); ++c) CHECK(zero(r, c) == 0);
    CHECK(h1_rank(cx) == 2 * genus_from_euler(s));
    CHECK(H1Basis(s).dimension() == 2 * genus_from_euler(s));
  }
}

TEST_CASE("width-one cylinders give boundary entries of size two or zero") {
  const ChainComplex cx = chain_complex(builtin::example3(3, 7));
  // one square: h_0 and v_0 each appear twice with opposite signs
  CHECK(cx.boundary2(0, 0) == 0);
  CHECK(cx.boundary2(1, 0) == 0);
}

TEST_CASE("Example 2 monodromy on H1") {
  const auto s = builtin::example2();
  const H1Matrix h = h1_matrix(s, monodromy(s));
  CHECK(h.dimension() == 2);
  CHECK(h.matrix.trace() == 14);
  CHECK(h.matrix.determinant() == 1);
  CHECK(char_poly(h.matrix) == IntPolynomial{1, -14, 1});
}

TEST_CASE("Example 4 characteristic polynomial") {
  CHECK(monodromy_char_poly(builtin::example4(3, 7)) == IntPolynomial{1, -1, -1, -1, 1});
}

TEST_CASE("Example 3 matches the closed form") {
  for (int q = 2; q <= 6; ++q) {
    for (int r = 2; r <= 9; ++r) {
      const auto s = builtin::example3(q, r);
      const H1Matrix h = h1_matrix(s, monodromy(s));
      const IntMatrix expected{{-1, 2 - q}, {r - 2, (r - 2) * (q - 2) - 1}};
      CHECK(char_poly(h.matrix) == char_poly(expected));
    }
  }
  const auto s = builtin::example3(3, 7);
  CHECK(h1_matrix(s, monodromy(s)).matrix.trace() == 3);
}

TEST_CASE("ping-pong (3, 6, 16) polynomial") {
  const IntPolynomial expected{1, -4, -4, -4, -4, -4, -14, -4, -4, -4, -4, -4, 1};
  const IntPolynomial cp = monodromy_char_poly(builtin::pingpong(3, 6, 16));
  CHECK(divides(expected, cp));
  CHECK(cp == expected);
}

TEST_CASE("identity chain map acts as the identity") {
  for (const auto& s : {builtin::example2(), builtin::example4(3, 7), builtin::pingpong(2, 3, 5)}) {
    const H1Matrix h = h1_matrix(s, identity_map(s));
    CHECK(h.matrix == IntMatrix::identity(h.dimension()));
  }
}

TEST_CASE("char_poly small cases") {
  CHECK(char_poly(IntMatrix{{-5, -8}, {12, 19}}) == IntPolynomial{1, -14, 1});
  CHECK(char_poly(IntMatrix::identity(4)) == IntPolynomial{1, -4, 6, -4, 1});
  CHECK(char_poly(IntMatrix(0, 0)) == IntPolynomial{1});
}

TEST_CASE("Berkowitz agrees with Faddeev-LeVerrier") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 7;
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = entry(rng);
    const IntPolynomial cp = char_poly(m);
    CHECK(cp == testing::faddeev_leverrier(m));
    CHECK(cp.coeff(0) == (n % 2 ? -m.determinant() : m.determinant()));
  }
}

TEST_CASE("Example 1 trace formula on the {2,3,4}^4 grid") {
  for (int p = 2; p <= 4; ++p)
    for (int q = 2; q <= 4; ++q)
      for (int r = 2; r <= 4; ++r)
        for (int s = 2; s <= 4; ++s) {
          const auto surf = builtin::example1(p, q, r, s);
          const H1Matrix h = h1_matrix(surf, monodromy(surf));
          CHECK(h.matrix.trace() == (p + r - 2) * (q + s - 2) - 2);
          CHECK(h.matrix.determinant() == 1);
        }
}

TEST_CASE("the characteristic polynomial does not depend on the basis") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = testing::random_surface(rng, 1 + trial % 10);
    const IntPolynomial base = monodromy_char_poly(s);
    for (std::uint64_t seed : {1u, 2u, 3u}) CHECK(monodromy_char_poly(s, seed + trial) == base);
  }
}

TEST_CASE("single antitwists have determinant +-1, composites 1 with reciprocal polynomial") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = testing::random_surface(rng, 1 + trial % 10);
    for (const auto& f : {horizontal_antitwist(s), vertical_antitwist(s)}) {
      const BigInt d = h1_matrix(s, f).matrix.determinant();
      CHECK((d == 1 || d == -1));
    }
    const H1Matrix m = h1_matrix(s, monodromy(s));
    CHECK(m.matrix.determinant() == 1);
    CHECK(char_poly(m.matrix).is_reciprocal());
  }
}

TEST_CASE("periods vanish on boundaries") {
  const auto s = builtin::pingpong(2, 3, 5);
  for (int q = 0; q < s.size(); ++q) {
    const auto [x, y] = period(s, square_boundary(s, q));
    CHECK(x == 0);
    CHECK(y == 0);
  }
}

TEST_CASE("h1_matrix rejects a map that does not commute with the boundary") {
  const auto s = builtin::example2();
  auto images = monodromy(s).edge_images();
  images[3].add(4, 1);
  const CellularChainMap bad(s, monodromy(s).vertex_map(), images, ChainMapLabel::Composite);
  try {
    h1_matrix(s, bad);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ChainMapInvalid);
  }
}

}  // TEST_SUITE
