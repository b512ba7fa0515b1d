#include "bacfi/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bacfi/error.hpp"

namespace bacfi {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  c_.reserve(coeffs.size());
  for (long long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::x_minus(const BigInt& root) { return IntPolynomial({-root, BigInt(1)}); }

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const {
  return (i < 0 || i > degree()) ? BigInt(0) : c_[i];
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
  // b^d p(a/b) = sum c_i a^i b^(d-i), and b > 0
  const BigInt a = numerator(x);
  const BigInt b = denominator(x);
  BigInt acc = 0;
  BigInt bpow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * a + *it * bpow;
    bpow *= b;
  }
  return acc.sign();
}

double IntPolynomial::eval_approx(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long long>(i);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<BigInt> r(c_.rbegin(), c_.rend());
  return IntPolynomial(std::move(r));
}

bool IntPolynomial::is_reciprocal() const {
  if (is_zero()) return false;
  return std::equal(c_.begin(), c_.end(), c_.rbegin());
}

bool IntPolynomial::is_antireciprocal() const {
  if (is_zero()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != -c_[c_.size() - 1 - i]) return false;
  }
  return true;
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
  return abs(g);
}

IntPolynomial IntPolynomial::primitive() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] / g;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const BigInt& k, const IntPolynomial& p) {
  std::vector<BigInt> out(p.c_.size());
  for (std::size_t i = 0; i < p.c_.size(); ++i) out[i] = k * p.c_[i];
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::vector<std::string> IntPolynomial::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& v : c_) out.push_back(v.str());
  return out;
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  const BigInt& lb = b.leading();
  int dr = static_cast<int>(r.size()) - 1;
  int steps = std::max(a.degree() - db + 1, 0);
  while (dr >= db) {
    const BigInt lr = r[dr];
    for (auto& v : r) v *= lb;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= lr * b.coeffs()[i];
    --steps;
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
  }
  IntPolynomial out(std::move(r));
  // make it a genuine lc(b)^(da-db+1) multiple even if the degree collapsed early
  for (; steps > 0; --steps) out = lb * out;
  return out;
}

std::pair<IntPolynomial, IntPolynomial> divide_monic(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  const BigInt& lb = b.leading();
  std::vector<BigInt> q(std::max(a.degree() - db + 1, 0));
  for (int dr = static_cast<int>(r.size()) - 1; dr >= db; --dr) {
    if (r[dr] == 0) continue;
    BigInt rem;
    BigInt factor;
    boost::multiprecision::divide_qr(r[dr], lb, factor, rem);
    if (rem != 0) throw std::domain_error("inexact polynomial division");
    q[dr - db] = factor;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= factor * b.coeffs()[i];
  }
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divide_monic(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial does not divide");
  return q;
}

bool divides(const IntPolynomial& b, const IntPolynomial& a) {
  if (b.is_zero()) return a.is_zero();
  return pseudo_remainder(a, b).is_zero();
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive();
  IntPolynomial y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p.primitive();
  const IntPolynomial g = gcd(p, p.derivative());
  return exact_divide(p.primitive(), g).primitive();
}

IntPolynomial cyclotomic(int m) {
  // x^m - 1 divided by all proper divisor cyclotomics
  IntPolynomial p = IntPolynomial::monomial(1, m) - IntPolynomial{1};
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = exact_divide(p, cyclotomic(d));
  }
  return p;
}

IntPolynomial parse_coefficients(const std::string& csv) {
  std::vector<BigInt> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t\n");
    const auto e = item.find_last_not_of(" \t\n");
    if (b == std::string::npos) throw Error(ErrorKind::MalformedDocument, "empty coefficient in list");
    const std::string tok = item.substr(b, e - b + 1);
    const std::size_t digits_from = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (digits_from == tok.size() ||
        !std::all_of(tok.begin() + digits_from, tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      throw Error(ErrorKind::MalformedDocument, "coefficient '" + tok + "' is not an integer");
    }
    out.emplace_back(tok[0] == '+' ? tok.substr(1) : tok);
  }
  IntPolynomial p(std::move(out));
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the polynomial is zero");
  return p;
}

}  // namespace bacfi
