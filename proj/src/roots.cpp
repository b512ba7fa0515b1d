#include "bacfi/roots.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bacfi/error.hpp"
#include "bacfi/finite_field.hpp"

namespace bacfi {
namespace {

// divide by the positive content, keeping the sign
IntPolynomial positive_part(const IntPolynomial& p) {
  const BigInt c = p.content();
  if (c <= 1) return p;
  std::vector<BigInt> out = p.coeffs();
  for (auto& v : out) v /= c;
  return IntPolynomial(std::move(out));
}

int sign_at_infinity(const IntPolynomial& p, bool negative) {
  const int s = p.leading().sign();
  return (negative && p.degree() % 2 == 1) ? -s : s;
}

int variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at(const std::vector<IntPolynomial>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& f : chain) signs.push_back(f.sign_at(x));
  return variations(signs);
}

int variations_at_infinity(const std::vector<IntPolynomial>& chain, bool negative) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& f : chain) signs.push_back(sign_at_infinity(f, negative));
  return variations(signs);
}

BigInt cauchy_bound(const IntPolynomial& p) {
  const BigInt lc = abs(p.leading());
  BigInt m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    const BigInt c = abs(p.coeffs()[i]);
    const BigInt q = (c + lc - 1) / lc;
    if (q > m) m = q;
  }
  return m + 1;
}

// a split point strictly inside (lo, hi) that is not a root
Rational split_point(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  for (int den = 2;; ++den) {
    for (int num = den / 2; num >= 1; --num) {
      for (int k : {num, den - num}) {
        const Rational mid = lo + (hi - lo) * Rational(k, den);
        if (p.sign_at(mid) != 0) return mid;
      }
    }
  }
}

IntPolynomial x_power_minus_one(int m) { return IntPolynomial::monomial(1, m) - IntPolynomial{1}; }

Irreducibility modular_certificate(const IntPolynomial& sf) {
  Irreducibility out;
  const int d = sf.degree();
  // attainable factor degrees over Q must be attainable modulo every good prime
  std::vector<bool> possible(d + 1, true);
  std::vector<int> used;
  for (int prime : gf::small_primes(101)) {
    if (!gf::good_reduction(sf, prime)) continue;
    const gf::Poly r = gf::reduce(sf, prime);
    if (gf::irreducible(r, prime)) {
      out.status = Irreducibility::Status::Certified;
      out.prime = prime;
      out.method = "mod-p";
      out.sieve_primes.clear();
      return out;
    }
    std::vector<bool> sums(d + 1, false);
    sums[0] = true;
    for (int k : gf::factor_degrees(r, prime))
      for (int s = d; s >= k; --s) sums[s] = sums[s] || sums[s - k];
    bool changed = false;
    for (int s = 0; s <= d; ++s) {
      if (possible[s] && !sums[s]) {
        possible[s] = false;
        changed = true;
      }
    }
    if (changed) used.push_back(prime);
    // keep scanning for a single-prime certificate once the sieve closes
    if (out.method.empty() && std::none_of(possible.begin() + 1, possible.end() - 1, [](bool b) { return b; })) {
      out.status = Irreducibility::Status::Certified;
      out.method = "degree-sieve";
      out.sieve_primes = used;
    }
  }
  return out;
}

}  // namespace

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
  std::vector<IntPolynomial> chain{p};
  if (p.degree() < 1) return chain;
  chain.push_back(p.derivative());
  while (chain.back().degree() > 0) {
    const IntPolynomial& a = chain[chain.size() - 2];
    const IntPolynomial& b = chain.back();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    const int delta = a.degree() - b.degree() + 1;
    const bool flip = b.leading() < 0 && delta % 2 == 1;
    r = flip ? r : -r;
    chain.push_back(positive_part(r));
  }
  return chain;
}

int count_roots(const std::vector<IntPolynomial>& chain, const Rational& a, const Rational& b) {
  return variations_at(chain, a) - variations_at(chain, b);
}

int count_real_roots(const IntPolynomial& p) {
  if (p.degree() < 1) return 0;
  const auto chain = sturm_chain(square_free_part(p));
  return variations_at_infinity(chain, true) - variations_at_infinity(chain, false);
}

std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot isolate the roots of the zero polynomial");
  const IntPolynomial sf = square_free_part(p);
  std::vector<RootInterval> out;
  if (sf.degree() < 1) return out;
  const auto chain = sturm_chain(sf);
  const Rational bound(cauchy_bound(sf));

  struct Job {
    Rational lo, hi;
    int count;
  };
  std::vector<Job> stack{{-bound, bound, count_roots(chain, -bound, bound)}};
  while (!stack.empty()) {
    Job job = std::move(stack.back());
    stack.pop_back();
    if (job.count == 0) continue;
    if (job.count == 1) {
      out.push_back({job.lo, job.hi});
      continue;
    }
    const Rational mid = split_point(sf, job.lo, job.hi);
    const int left = count_roots(chain, job.lo, mid);
    // right half first on the stack so that the left half is processed first
    stack.push_back({mid, job.hi, job.count - left});
    stack.push_back({job.lo, mid, left});
  }
  return out;
}

RootInterval refine(const IntPolynomial& sf, RootInterval iv, const Rational& width) {
  if (iv.lo == iv.hi) return iv;
  const int s_lo = sf.sign_at(iv.lo);
  while (iv.hi - iv.lo > width) {
    const Rational mid = (iv.lo + iv.hi) / 2;
    const int s = sf.sign_at(mid);
    if (s == 0) return {mid, mid};
    (s == s_lo ? iv.lo : iv.hi) = mid;
  }
  return iv;
}

IntPolynomial chebyshev_reduce(const IntPolynomial& g) {
  if (g.degree() % 2 != 0 || !g.is_reciprocal()) {
    throw std::invalid_argument("chebyshev_reduce needs a palindromic polynomial of even degree");
  }
  const int m = g.degree() / 2;
  const IntPolynomial y{0, 1};
  IntPolynomial q(std::vector<BigInt>{g.coeff(m)});
  IntPolynomial prev{2};  // x^0 + x^-0
  IntPolynomial cur = y;  // x + 1/x
  for (int j = 1; j <= m; ++j) {
    q = q + g.coeff(m + j) * cur;
    IntPolynomial next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return q;
}

IntPolynomial chebyshev_expand(const IntPolynomial& q) {
  const int m = q.degree();
  const IntPolynomial x2p1{1, 0, 1};
  IntPolynomial out;
  IntPolynomial power{1};
  for (int k = 0; k <= m; ++k) {
    out = out + q.coeff(k) * (IntPolynomial::monomial(1, m - k) * power);
    power = power * x2p1;
  }
  return out;
}

RootClassification classify_roots(const IntPolynomial& p, const Rational& enclosure_width) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot classify the roots of the zero polynomial");
  RootClassification rc;
  const IntPolynomial sf = square_free_part(p);
  rc.square_free_input = sf.degree() == p.degree();
  rc.degree = sf.degree();
  rc.reciprocal = p.is_reciprocal() || p.is_antireciprocal();
  if (rc.degree < 1) return rc;

  IntPolynomial h = sf;
  bool split_off = false;
  if (h.coeff(0) == 0) {
    ++rc.real_count;
    h = exact_divide(h, IntPolynomial{0, 1});
    split_off = true;
  }
  for (int r : {1, -1}) {
    if (h.degree() >= 1 && h.eval(r) == 0) {
      ++rc.real_count;
      h = exact_divide(h, IntPolynomial::x_minus(r));
      split_off = true;
    }
  }
  if (h.degree() >= 1) {
    const IntPolynomial g = gcd(h, h.reversed());
    if (g.degree() >= 1) {
      if (!g.is_reciprocal() || g.degree() % 2 != 0) {
        throw Error(ErrorKind::NotSquareFree, "reciprocal part is not palindromic after removing x = +-1");
      }
      const IntPolynomial q = chebyshev_reduce(g);
      const auto chain = sturm_chain(q);
      const int inside = count_roots(chain, Rational(-2), Rational(2));
      const int total = count_real_roots(q);
      rc.unit_circle_count += 2 * inside;
      rc.real_count += 2 * (total - inside);
      if (g.degree() < h.degree()) split_off = true;
    }
    const IntPolynomial rest = g.degree() >= 1 ? exact_divide(h.primitive(), g) : h;
    rc.real_count += count_real_roots(rest);
  }
  rc.other_count = rc.degree - rc.real_count - rc.unit_circle_count;

  const auto roots = isolate_real_roots(sf);
  if (!roots.empty()) rc.largest_real_root = refine(sf, roots.back(), enclosure_width);

  if (!rc.square_free_input) {
    rc.irreducibility.status = Irreducibility::Status::Reducible;
    rc.irreducibility.method = "repeated-factor";
  } else if (rc.degree == 1) {
    rc.irreducibility.status = Irreducibility::Status::Certified;
    rc.irreducibility.method = "linear";
  } else if (split_off) {
    rc.irreducibility.status = Irreducibility::Status::Reducible;
    rc.irreducibility.method = "split";
  } else {
    rc.irreducibility = modular_certificate(sf);
  }
  return rc;
}

ExclusionVerdict exclusion_verdict(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the polynomial is zero");
  const IntPolynomial sf = square_free_part(p);
  const bool above_one =
      sf.degree() >= 1 && count_roots(sturm_chain(sf), Rational(1), Rational(cauchy_bound(sf))) > 0;
  if (!above_one) {
    throw Error(ErrorKind::NoRealRootGreaterThanOne,
                "polynomial " + p.to_string() + " has no real root greater than one");
  }
  ExclusionVerdict v;
  v.classification = classify_roots(p);
  v.no_power_thurston = v.classification.other_count > 0;
  v.no_power_penner = v.classification.unit_circle_count > 0;
  v.certified = v.classification.irreducibility.status == Irreducibility::Status::Certified;
  return v;
}

std::vector<FactorPiece> split_factors(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot split the zero polynomial");
  std::vector<FactorPiece> pieces;
  auto emit = [&](const IntPolynomial& f, const char* kind) {
    pieces.push_back({f, kind, classify_roots(f)});
  };
  IntPolynomial h = square_free_part(p);
  if (h.degree() < 1) return pieces;
  if (h.coeff(0) == 0) {
    emit(IntPolynomial{0, 1}, "x");
    h = exact_divide(h, IntPolynomial{0, 1});
  }
  for (int r : {1, -1}) {
    if (h.degree() >= 1 && h.eval(r) == 0) {
      emit(IntPolynomial::x_minus(r), r == 1 ? "x-1" : "x+1");
      h = exact_divide(h, IntPolynomial::x_minus(r));
    }
  }
  if (h.degree() < 1) return pieces;
  IntPolynomial g = gcd(h, h.reversed());
  const IntPolynomial rest = g.degree() >= 1 ? exact_divide(h.primitive(), g) : h;
  if (g.degree() >= 1) {
    IntPolynomial cyclo{1};
    const int bound = 2 * g.degree() * g.degree() + 2;
    for (int m = 3; m <= bound && g.degree() >= 1; ++m) {
      const IntPolynomial c = gcd(g, x_power_minus_one(m));
      if (c.degree() >= 1) {
        cyclo = cyclo * c;
        g = exact_divide(g, c);
      }
    }
    if (cyclo.degree() >= 1) emit(cyclo.primitive(), "cyclotomic");
    if (g.degree() >= 1) emit(g.primitive(), "reciprocal");
  }
  if (rest.degree() >= 1) emit(rest.primitive(), "non-reciprocal");
  return pieces;
}

std::optional<std::size_t> stretch_factor_piece(const std::vector<FactorPiece>& pieces) {
  struct Candidate {
    std::size_t index;
    IntPolynomial sf;
    RootInterval iv;
  };
  std::vector<Candidate> cands;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& lr = pieces[i].classification.largest_real_root;
    if (!lr) continue;
    const IntPolynomial sf = square_free_part(pieces[i].factor);
    RootInterval iv = *lr;
    // discard pieces whose largest root is at most one
    while (iv.lo < 1 && iv.hi > 1) iv = refine(sf, iv, (iv.hi - iv.lo) / 2);
    if (iv.hi <= 1) continue;
    cands.push_back({i, sf, iv});
  }
  if (cands.empty()) return std::nullopt;
  // pieces are pairwise coprime, so refinement eventually separates the roots
  for (;;) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < cands.size(); ++i)
      if (cands[i].iv.lo > cands[best].iv.lo) best = i;
    bool clear = true;
    for (std::size_t i = 0; i < cands.size(); ++i)
      if (i != best && cands[i].iv.hi > cands[best].iv.lo) clear = false;
    if (clear) return cands[best].index;
    for (auto& c : cands) c.iv = refine(c.sf, c.iv, (c.iv.hi - c.iv.lo) / 2);
  }
}

}  // namespace bacfi
