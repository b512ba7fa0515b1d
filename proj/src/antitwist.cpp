#include "bacfi/antitwist.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "bacfi/error.hpp"

namespace bacfi {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("chain coefficient overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("chain coefficient overflow");
  return out;
}

std::vector<int> translated_vertex_map(const BacfiSurface& s, const std::vector<int>& vertex_of) {
  const int classes = vertex_of.empty() ? 0 : *std::max_element(vertex_of.begin(), vertex_of.end()) + 1;
  std::vector<int> map(classes, -1);
  for (int q = 0; q < s.size(); ++q) {
    const int target = vertex_of[s.north_east(q)];
    int& slot = map[vertex_of[q]];
    if (slot == -1) slot = target;
    else if (slot != target) {
      throw Error(ErrorKind::ChainMapInvalid, "q -> NE(q) does not descend to vertex classes");
    }
  }
  return map;
}

}  // namespace

void Chain::add(int edge, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(edge, coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

void Chain::add(const Chain& other, std::int64_t scale) {
  for (const auto& [edge, c] : other.terms_) add(edge, checked_mul(c, scale));
}

std::int64_t Chain::coeff(int edge) const {
  auto it = terms_.find(edge);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t Chain::mass() const {
  std::int64_t m = 0;
  for (const auto& [edge, c] : terms_) m = checked_add(m, std::abs(c));
  return m;
}

CellularChainMap::CellularChainMap(BacfiSurface surface, std::vector<int> vertex_map,
                                   std::vector<Chain> edge_images, ChainMapLabel label)
    : surface_(std::move(surface)),
      vertex_map_(std::move(vertex_map)),
      edge_images_(std::move(edge_images)),
      label_(label) {
  if (edge_images_.size() != static_cast<std::size_t>(2 * surface_.size())) {
    throw Error(ErrorKind::ChainMapInvalid, "a chain map needs one image per edge");
  }
}

Chain CellularChainMap::apply(const Chain& c) const {
  Chain out;
  for (const auto& [edge, coeff] : c.terms()) out.add(edge_images_.at(edge), coeff);
  return out;
}

std::map<int, std::int64_t> boundary(const BacfiSurface& s, const std::vector<int>& vertex_of,
                                     const Chain& c) {
  const int n = s.size();
  std::map<int, std::int64_t> out;
  for (const auto& [edge, coeff] : c.terms()) {
    const int q = edge % n;
    const int head = edge < n ? s.east(q) : s.north(q);
    out[vertex_of[head]] += coeff;
    out[vertex_of[q]] -= coeff;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Chain square_boundary(const BacfiSurface& s, int q) {
  const int n = s.size();
  Chain c;
  c.add(h_edge(n, q), 1);
  c.add(v_edge(n, s.east(q)), 1);
  c.add(h_edge(n, s.north(q)), -1);
  c.add(v_edge(n, q), -1);
  return c;
}

bool commutes_with_boundary(const CellularChainMap& f) {
  const BacfiSurface& s = f.surface();
  const auto vertex_of = vertex_index(s);
  const std::size_t classes = vertex_classes(s).size();
  const auto& vmap = f.vertex_map();
  if (vmap.size() != classes) return false;
  std::vector<bool> hit(classes, false);
  for (int v : vmap) {
    if (v < 0 || static_cast<std::size_t>(v) >= classes || hit[v]) return false;
    hit[v] = true;
  }
  if (f.label() == ChainMapLabel::HorizontalAntitwist || f.label() == ChainMapLabel::VerticalAntitwist) {
    try {
      if (vmap != translated_vertex_map(s, vertex_of)) return false;
    } catch (const Error&) {
      return false;
    }
  }

  const int n = s.size();
  for (int e = 0; e < 2 * n; ++e) {
    Chain single;
    single.add(e, 1);
    std::map<int, std::int64_t> mapped;
    for (const auto& [v, c] : boundary(s, vertex_of, single)) mapped[vmap[v]] += c;
    std::erase_if(mapped, [](const auto& kv) { return kv.second == 0; });
    if (boundary(s, vertex_of, f.image(e)) != mapped) return false;
  }
  return true;
}

CellularChainMap identity_map(const BacfiSurface& s) {
  const int n = s.size();
  std::vector<Chain> images(2 * n);
  for (int e = 0; e < 2 * n; ++e) images[e].add(e, 1);
  std::vector<int> vmap(vertex_classes(s).size());
  for (std::size_t v = 0; v < vmap.size(); ++v) vmap[v] = static_cast<int>(v);
  return CellularChainMap(s, std::move(vmap), std::move(images), ChainMapLabel::Identity);
}

CellularChainMap horizontal_antitwist(const BacfiSurface& s) {
  const int n = s.size();
  std::vector<Chain> images(2 * n);
  for (int q = 0; q < n; ++q) {
    images[h_edge(n, q)].add(h_edge(n, s.north_east(q)), 1);

    const long long shift = static_cast<long long>(s.h_exp(q)) * horizontal_width(s, q) - 2;
    Chain& img = images[v_edge(n, q)];
    int x = q;
    for (long long i = 1; i <= shift; ++i) {
      x = s.east(x);
      img.add(h_edge(n, s.north(x)), 1);
    }
    img.add(v_edge(n, s.west(q)), -1);
  }
  return CellularChainMap(s, translated_vertex_map(s, vertex_index(s)), std::move(images),
                          ChainMapLabel::HorizontalAntitwist);
}

CellularChainMap vertical_antitwist(const BacfiSurface& s) {
  const int n = s.size();
  std::vector<Chain> images(2 * n);
  for (int q = 0; q < n; ++q) {
    images[v_edge(n, q)].add(v_edge(n, s.east(s.north(q))), 1);

    const long long shift = static_cast<long long>(s.v_exp(q)) * vertical_height(s, q) - 2;
    Chain& img = images[h_edge(n, q)];
    int x = q;
    for (long long j = 1; j <= shift; ++j) {
      x = s.north(x);
      img.add(v_edge(n, s.east(x)), 1);
    }
    img.add(h_edge(n, s.south(q)), -1);
  }
  return CellularChainMap(s, translated_vertex_map(s, vertex_index(s)), std::move(images),
                          ChainMapLabel::VerticalAntitwist);
}

CellularChainMap compose(const CellularChainMap& outer, const CellularChainMap& inner) {
  if (!(outer.surface() == inner.surface())) {
    throw Error(ErrorKind::SurfaceMismatch, "cannot compose chain maps on different surfaces");
  }
  std::vector<int> vmap(inner.vertex_map().size());
  for (std::size_t v = 0; v < vmap.size(); ++v) vmap[v] = outer.vertex_map()[inner.vertex_map()[v]];
  std::vector<Chain> images;
  images.reserve(inner.edge_images().size());
  for (const Chain& c : inner.edge_images()) images.push_back(outer.apply(c));
  return CellularChainMap(inner.surface(), std::move(vmap), std::move(images), ChainMapLabel::Composite);
}

IntMatrix linear_part(const CellularChainMap& f, int q) {
  const int n = f.surface().size();
  IntMatrix m(2, 2);
  for (const auto& [col, edge] : {std::pair{0, h_edge(n, q)}, std::pair{1, v_edge(n, q)}}) {
    for (const auto& [e, c] : f.image(edge).terms()) m(e < n ? 0 : 1, col) += c;
  }
  return m;
}

CellularChainMap monodromy(const BacfiSurface& s) {
  return compose(vertical_antitwist(s), horizontal_antitwist(s));
}

}  // namespace bacfi
