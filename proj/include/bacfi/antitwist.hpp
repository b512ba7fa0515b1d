#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "bacfi/int_matrix.hpp"
#include "bacfi/surface.hpp"

namespace bacfi {

/// Edges of the square complex: h_q (south side of q, oriented east) has
/// index q, v_q (west side of q, oriented north) has index n + q.
inline int h_edge(int /*n*/, int q) { return q; }
inline int v_edge(int n, int q) { return n + q; }

/// Sparse signed integer combination of edges. Zero coefficients are never stored.
class Chain {
 public:
  void add(int edge, std::int64_t coeff);
  void add(const Chain& other, std::int64_t scale = 1);

  std::int64_t coeff(int edge) const;
  const std::map<int, std::int64_t>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  /// Sum of absolute values of coefficients.
  std::int64_t mass() const;

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  std::map<int, std::int64_t> terms_;
};

enum class ChainMapLabel { Identity, HorizontalAntitwist, VerticalAntitwist, Composite };

class CellularChainMap {
 public:
  CellularChainMap(BacfiSurface surface, std::vector<int> vertex_map,
                   std::vector<Chain> edge_images, ChainMapLabel label);

  const BacfiSurface& surface() const noexcept { return surface_; }
  const std::vector<int>& vertex_map() const noexcept { return vertex_map_; }
  const std::vector<Chain>& edge_images() const noexcept { return edge_images_; }
  const Chain& image(int edge) const { return edge_images_.at(edge); }
  ChainMapLabel label() const noexcept { return label_; }

  /// Push a chain through the map.
  Chain apply(const Chain& c) const;

 private:
  BacfiSurface surface_;
  std::vector<int> vertex_map_;  // indexed by vertex class
  std::vector<Chain> edge_images_;
  ChainMapLabel label_;
};

/// Boundary of a 1-chain as a map vertex class -> coefficient.
std::map<int, std::int64_t> boundary(const BacfiSurface& s, const std::vector<int>& vertex_of,
                                     const Chain& c);

/// Boundary of square q: h_q + v_{E(q)} - h_{N(q)} - v_q.
Chain square_boundary(const BacfiSurface& s, int q);

/// Checks that the vertex map is induced by q -> NE(q) on corner classes and
/// that every edge image has the boundary the vertex map prescribes.
bool commutes_with_boundary(const CellularChainMap& f);

CellularChainMap identity_map(const BacfiSurface& s);

/// Left-veering horizontal antitwist: on a horizontal cylinder of width w and
/// exponent k, h_q -> h_{N(E(q))} and
/// v_q -> sum_{i=1}^{kw-2} h_{N(E^i(q))} - v_{W(q)}.
CellularChainMap horizontal_antitwist(const BacfiSurface& s);

/// Right-veering vertical antitwist: on a vertical cylinder of height h and
/// exponent m, v_q -> v_{E(N(q))} and
/// h_q -> sum_{j=1}^{mh-2} v_{E(N^j(q))} - h_{S(q)}.
CellularChainMap vertical_antitwist(const BacfiSurface& s);

/// outer after inner. Throws SurfaceMismatch when the maps live on different surfaces.
CellularChainMap compose(const CellularChainMap& outer, const CellularChainMap& inner);

/// The divide monodromy: vertical antitwist after horizontal antitwist.
CellularChainMap monodromy(const BacfiSurface& s);

/// Linear part of f on square q in the (east, north) frame: the columns are
/// the holonomy vectors of the images of h_q and v_q. For a composite whose
/// intermediate squares lie in cylinders of different shapes this is a chain
/// holonomy, not a derivative, and its determinant need not be 1.
IntMatrix linear_part(const CellularChainMap& f, int q);

}  // namespace bacfi
