#include "bacfi/sl2.hpp"

#include <array>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>

#include "bacfi/error.hpp"
#include "bacfi/homology.hpp"

namespace bacfi {
namespace {

using Gen = std::array<long long, 4>;

// X, X^-1, Y, Y^-1
constexpr std::array<Gen, 4> kGenerators{{{1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, 1, 1}, {1, 0, -1, 1}}};

IntMatrix from_gen(const Gen& g) {
  IntMatrix m(2, 2);
  m(0, 0) = g[0];
  m(0, 1) = g[1];
  m(1, 0) = g[2];
  m(1, 1) = g[3];
  return m;
}

IntMatrix inverse_sl2(const IntMatrix& m) {
  IntMatrix inv(2, 2);
  inv(0, 0) = m(1, 1);
  inv(0, 1) = -m(0, 1);
  inv(1, 0) = -m(1, 0);
  inv(1, 1) = m(0, 0);
  return inv;
}

BigInt weight(const IntMatrix& m) { return abs(m(0, 0)) + abs(m(0, 1)) + abs(m(1, 0)) + abs(m(1, 1)); }

bool nonnegative(const IntMatrix& m) {
  return m(0, 0) >= 0 && m(0, 1) >= 0 && m(1, 0) >= 0 && m(1, 1) >= 0;
}

struct Normalized {
  IntMatrix a;  // P M P^-1
  IntMatrix p;
};

// Breadth-first search over conjugating words of bounded length for a
// representative that is nonnegative or strictly lighter.
bool bounded_search(Normalized& cur, int depth) {
  const BigInt start = weight(cur.a);
  struct Node {
    IntMatrix a, p;
    int depth;
  };
  std::deque<Node> queue{{cur.a, cur.p, 0}};
  std::map<std::array<std::string, 4>, bool> seen;
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    if (node.depth > 0 && (nonnegative(node.a) || weight(node.a) < start)) {
      cur = {node.a, node.p};
      return true;
    }
    if (node.depth == depth) continue;
    for (const auto& g : kGenerators) {
      const IntMatrix gm = from_gen(g);
      IntMatrix a = gm * node.a * inverse_sl2(gm);
      std::array<std::string, 4> key{a(0, 0).str(), a(0, 1).str(), a(1, 0).str(), a(1, 1).str()};
      if (seen.emplace(key, true).second) queue.push_back({std::move(a), gm * node.p, node.depth + 1});
    }
  }
  return false;
}

Normalized normalize(const IntMatrix& m) {
  Normalized cur{m, IntMatrix::identity(2)};
  while (!nonnegative(cur.a)) {
    BigInt best = weight(cur.a);
    std::optional<Normalized> next;
    for (const auto& g : kGenerators) {
      const IntMatrix gm = from_gen(g);
      IntMatrix a = gm * cur.a * inverse_sl2(gm);
      const BigInt w = weight(a);
      if (w < best) {
        best = w;
        next = Normalized{std::move(a), gm * cur.p};
      }
    }
    if (next) {
      cur = std::move(*next);
    } else if (!bounded_search(cur, 6)) {
      throw std::runtime_error("could not reduce matrix to a nonnegative representative");
    }
  }
  return cur;
}

}  // namespace

IntMatrix sl2_x() { return from_gen(kGenerators[0]); }
IntMatrix sl2_y() { return from_gen(kGenerators[2]); }

IntMatrix eval_word(const std::string& word) {
  IntMatrix m = IntMatrix::identity(2);
  for (char ch : word) {
    if (ch == 'X') m = m * sl2_x();
    else if (ch == 'Y') m = m * sl2_y();
    else throw std::invalid_argument(std::string("letter '") + ch + "' is not X or Y");
  }
  return m;
}

std::string canonical_rotation(const std::string& word) {
  std::string best = word;
  for (std::size_t i = 1; i < word.size(); ++i) {
    std::string r = word.substr(i) + word.substr(0, i);
    if (r < best) best = std::move(r);
  }
  return best;
}

std::string swap_letters(const std::string& word) {
  std::string out = word;
  for (char& ch : out) ch = ch == 'X' ? 'Y' : 'X';
  return out;
}

std::string compact_word(const std::string& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    out += word[i];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

XYWord xy_word(const IntMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2 || m.determinant() != 1) {
    throw Error(ErrorKind::NotSL2, "matrix is not in SL2(Z)");
  }
  if (m.trace() <= 2) {
    throw Error(ErrorKind::TraceTooSmall,
                "trace " + m.trace().str() + " <= 2: the class is periodic or reducible, no positive word");
  }
  Normalized n = normalize(m);
  std::string letters;
  IntMatrix a = n.a;
  while (!(a == IntMatrix::identity(2))) {
    if (a(0, 0) >= a(1, 0) && a(0, 1) >= a(1, 1)) {
      letters += 'X';
      a(0, 0) -= a(1, 0);
      a(0, 1) -= a(1, 1);
    } else if (a(1, 0) >= a(0, 0) && a(1, 1) >= a(0, 1)) {
      letters += 'Y';
      a(1, 0) -= a(0, 0);
      a(1, 1) -= a(0, 1);
    } else {
      throw std::runtime_error("nonnegative SL2 matrix with incomparable rows");
    }
  }
  // rotate to the canonical form and carry the conjugator along
  const std::string canon = canonical_rotation(letters);
  std::size_t shift = 0;
  for (; shift < letters.size(); ++shift) {
    if (letters.substr(shift) + letters.substr(0, shift) == canon) break;
  }
  const IntMatrix u = eval_word(letters.substr(0, shift));
  return XYWord{canon, inverse_sl2(u) * n.p};
}

TorusWord torus_word(const BacfiSurface& s) {
  const int g = genus_from_euler(s);
  if (g != 1) throw Error(ErrorKind::NotGenusOne, "surface has genus " + std::to_string(g) + ", not 1");
  const H1Matrix h = h1_matrix(s, monodromy(s));
  IntMatrix periods(2, 2);
  for (int j = 0; j < 2; ++j) {
    const auto [x, y] = period(s, h.basis[j]);
    periods(0, j) = x;
    periods(1, j) = y;
  }
  IntMatrix m = h.matrix;
  const bool flip = periods.determinant() < 0;
  if (flip) {
    m(0, 1) = -m(0, 1);
    m(1, 0) = -m(1, 0);
  }
  XYWord w = xy_word(m);
  std::string mirror = canonical_rotation(swap_letters(w.word));
  return TorusWord{std::move(w), std::move(m), flip, std::move(mirror)};
}

}  // namespace bacfi
