#include "bacfi/homology.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

#include "bacfi/error.hpp"

namespace bacfi {
namespace {

struct EdgeEnds {
  int tail;
  int head;
};

std::vector<EdgeEnds> edge_ends(const BacfiSurface& s, const std::vector<int>& vertex_of) {
  const int n = s.size();
  std::vector<EdgeEnds> ends(2 * n);
  for (int q = 0; q < n; ++q) {
    ends[h_edge(n, q)] = {vertex_of[q], vertex_of[s.east(q)]};
    ends[v_edge(n, q)] = {vertex_of[q], vertex_of[s.north(q)]};
  }
  return ends;
}

int rank_of(IntMatrix m) {
  // fraction-free row echelon
  int rank = 0;
  BigInt prev = 1;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r) {
      if (m(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(rank, j), m(pivot, j));
    for (int r = rank + 1; r < m.rows(); ++r) {
      for (int j = c + 1; j < m.cols(); ++j) m(r, j) = (m(r, j) * m(rank, c) - m(r, c) * m(rank, j)) / prev;
      m(r, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

}  // namespace

ChainComplex chain_complex(const BacfiSurface& s) {
  const int n = s.size();
  const auto vertex_of = vertex_index(s);
  const int classes = static_cast<int>(vertex_classes(s).size());
  ChainComplex cx{IntMatrix(2 * n, n), IntMatrix(classes, 2 * n)};
  for (int q = 0; q < n; ++q) {
    const Chain b = square_boundary(s, q);
    for (const auto& [e, c] : b.terms()) cx.boundary2(e, q) += c;
  }
  const auto ends = edge_ends(s, vertex_of);
  for (int e = 0; e < 2 * n; ++e) {
    cx.boundary1(ends[e].head, e) += 1;
    cx.boundary1(ends[e].tail, e) -= 1;
  }
  return cx;
}

int h1_rank(const ChainComplex& cx) {
  const int edges = cx.boundary1.cols();
  return edges - rank_of(cx.boundary1) - rank_of(cx.boundary2);
}

H1Basis::H1Basis(const BacfiSurface& s, std::optional<std::uint64_t> seed) {
  const int n = s.size();
  const auto vertex_of = vertex_index(s);
  const int classes = static_cast<int>(vertex_classes(s).size());
  const auto ends = edge_ends(s, vertex_of);

  square_boundaries_.reserve(n);
  for (int q = 0; q < n; ++q) square_boundaries_.push_back(square_boundary(s, q));

  std::vector<int> order(2 * n);
  std::iota(order.begin(), order.end(), 0);
  int root_vertex = 0;
  dual_root_ = 0;
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(order.begin(), order.end(), rng);
    root_vertex = static_cast<int>(rng() % classes);
    dual_root_ = static_cast<int>(rng() % n);
  }

  // spanning tree of the 1-skeleton
  std::vector<std::vector<int>> incident(classes);
  for (int e : order) {
    incident[ends[e].tail].push_back(e);
    if (ends[e].head != ends[e].tail) incident[ends[e].head].push_back(e);
  }
  std::vector<int> parent_edge(classes, -1);
  std::vector<bool> reached(classes, false);
  std::vector<bool> in_tree(2 * n, false);
  std::queue<int> bfs;
  bfs.push(root_vertex);
  reached[root_vertex] = true;
  while (!bfs.empty()) {
    const int v = bfs.front();
    bfs.pop();
    for (int e : incident[v]) {
      const int w = ends[e].tail == v ? ends[e].head : ends[e].tail;
      if (reached[w]) continue;
      reached[w] = true;
      parent_edge[w] = e;
      in_tree[e] = true;
      bfs.push(w);
    }
  }

  // spanning tree of the dual graph over the remaining edges
  std::vector<std::vector<std::pair<int, int>>> dual_adj(n);  // (edge, other square)
  for (int e : order) {
    if (in_tree[e]) continue;
    std::vector<int> sides;
    for (int q : {e % n, e < n ? s.south(e % n) : s.west(e % n)}) {
      if (square_boundaries_[q].coeff(e) != 0 && std::find(sides.begin(), sides.end(), q) == sides.end())
        sides.push_back(q);
    }
    if (sides.size() != 2) continue;
    dual_adj[sides[0]].push_back({e, sides[1]});
    dual_adj[sides[1]].push_back({e, sides[0]});
  }
  std::vector<bool> in_cotree(2 * n, false);
  std::vector<bool> seen(n, false);
  std::queue<int> dual_bfs;
  dual_bfs.push(dual_root_);
  seen[dual_root_] = true;
  while (!dual_bfs.empty()) {
    const int b = dual_bfs.front();
    dual_bfs.pop();
    for (const auto& [e, other] : dual_adj[b]) {
      if (seen[other]) continue;
      seen[other] = true;
      in_cotree[e] = true;
      dual_order_.push_back({other, b, e});
      dual_bfs.push(other);
    }
  }

  auto path_to_root = [&](int v) {
    Chain c;
    while (parent_edge[v] >= 0) {
      const int e = parent_edge[v];
      // walking from v toward the root
      if (ends[e].head == v) {
        c.add(e, -1);
        v = ends[e].tail;
      } else {
        c.add(e, 1);
        v = ends[e].head;
      }
    }
    return c;
  };

  for (int e = 0; e < 2 * n; ++e) {
    if (in_tree[e] || in_cotree[e]) continue;
    Chain z;
    z.add(e, 1);
    z.add(path_to_root(ends[e].head));
    z.add(path_to_root(ends[e].tail), -1);
    leftover_.push_back(e);
    cycles_.push_back(std::move(z));
  }
  if (static_cast<int>(cycles_.size()) != 2 * genus_from_euler(s)) {
    throw Error(ErrorKind::ChainMapInvalid, "tree-cotree decomposition produced the wrong number of generators");
  }
}

std::vector<BigInt> H1Basis::coordinates(const Chain& cycle) const {
  const int n = static_cast<int>(square_boundaries_.size());
  std::vector<BigInt> a(n);
  for (const auto& step : dual_order_) {
    const std::int64_t dp = square_boundaries_[step.parent].coeff(step.edge);
    const std::int64_t db = square_boundaries_[step.square].coeff(step.edge);
    a[step.square] = (BigInt(cycle.coeff(step.edge)) - a[step.parent] * dp) / db;
  }
  std::vector<BigInt> out;
  out.reserve(leftover_.size());
  for (int e : leftover_) {
    BigInt c = cycle.coeff(e);
    for (int q = 0; q < n; ++q) {
      const std::int64_t d = square_boundaries_[q].coeff(e);
      if (d != 0) c -= a[q] * d;
    }
    out.push_back(c);
  }
  return out;
}

H1Matrix h1_matrix(const BacfiSurface& s, const CellularChainMap& f, std::optional<std::uint64_t> seed) {
  if (!(f.surface() == s)) throw Error(ErrorKind::SurfaceMismatch, "chain map lives on a different surface");
  if (!commutes_with_boundary(f)) {
    throw Error(ErrorKind::ChainMapInvalid, "chain map does not commute with the boundary");
  }
  H1Basis basis(s, seed);
  const int dim = basis.dimension();
  IntMatrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    const auto col = basis.coordinates(f.apply(basis.cycles()[j]));
    for (int i = 0; i < dim; ++i) m(i, j) = col[i];
  }
  return H1Matrix{basis.cycles(), std::move(m)};
}

std::pair<BigInt, BigInt> period(const BacfiSurface& s, const Chain& c) {
  const int n = s.size();
  BigInt x = 0, y = 0;
  for (const auto& [e, coeff] : c.terms()) (e < n ? x : y) += coeff;
  return {x, y};
}

}  // namespace bacfi
