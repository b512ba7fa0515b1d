#include "bacfi/finite_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace bacfi::gf {
namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inverse(std::int64_t a, std::int64_t p) {
  // Fermat; p is prime
  std::int64_t result = 1, base = mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

std::pair<Poly, Poly> divmod(Poly a, const Poly& b, std::int64_t p) {
  if (b.empty()) throw std::domain_error("division by zero polynomial mod p");
  trim(a);
  const std::int64_t inv = inverse(b.back(), p);
  Poly q(std::max(deg(a) - deg(b) + 1, 0));
  for (int d = deg(a); d >= deg(b); --d) {
    const std::int64_t c = a[d] * inv % p;
    if (c == 0) continue;
    q[d - deg(b)] = c;
    for (int i = 0; i <= deg(b); ++i) a[d - deg(b) + i] = mod(a[d - deg(b) + i] - c * b[i], p);
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly sub(Poly a, const Poly& b, std::int64_t p) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
  trim(a);
  return a;
}

Poly pow_mod(Poly base, std::int64_t e, const Poly& m, std::int64_t p) {
  Poly result{1};
  base = rem(base, m, p);
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m, p);
    base = mul_mod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Poly reduce(const IntPolynomial& f, std::int64_t p) {
  Poly out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    BigInt r = c % p;
    if (r < 0) r += p;
    out.push_back(r.convert_to<std::int64_t>());
  }
  trim(out);
  return out;
}

Poly rem(Poly a, const Poly& b, std::int64_t p) { return divmod(std::move(a), b, p).second; }

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return rem(std::move(out), m, p);
}

Poly gcd(Poly a, Poly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::int64_t inv = inverse(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

Poly derivative(const Poly& a, std::int64_t p) {
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mod(a[i] * static_cast<std::int64_t>(i), p));
  trim(d);
  return d;
}

bool good_reduction(const IntPolynomial& f, std::int64_t p) {
  const Poly r = reduce(f, p);
  if (deg(r) != f.degree()) return false;
  return deg(gcd(r, derivative(r, p), p)) == 0;
}

bool irreducible(const Poly& f, std::int64_t p) {
  const int d = deg(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  const Poly x{0, 1};
  // x^(p^k) mod f for the needed k
  auto frobenius_power = [&](int k) {
    Poly h = x;
    for (int i = 0; i < k; ++i) h = pow_mod(h, p, f, p);
    return h;
  };
  if (!sub(frobenius_power(d), x, p).empty()) return false;
  for (int r : prime_divisors(d)) {
    if (deg(gcd(sub(frobenius_power(d / r), x, p), f, p)) != 0) return false;
  }
  return true;
}

std::vector<int> factor_degrees(const Poly& f_in, std::int64_t p) {
  std::vector<int> degrees;
  Poly f = f_in;
  const Poly x{0, 1};
  Poly h = x;
  for (int i = 1; 2 * i <= deg(f); ++i) {
    h = pow_mod(h, p, f, p);
    const Poly g = gcd(sub(h, x, p), f, p);
    if (deg(g) > 0) {
      for (int k = 0; k < deg(g) / i; ++k) degrees.push_back(i);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (deg(f) > 0) degrees.push_back(deg(f));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::vector<int> small_primes(int limit) {
  std::vector<int> out;
  for (int n = 2; n <= limit; ++n) {
    bool prime = true;
    for (int d : out) {
      if (d * d > n) break;
      if (n % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(n);
  }
  return out;
}

}  // namespace bacfi::gf
