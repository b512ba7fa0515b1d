#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bacfi/antitwist.hpp"
#include "bacfi/int_matrix.hpp"
#include "bacfi/surface.hpp"

namespace bacfi {

/// Cellular chain complex of the square tiling: squares -> edges -> vertex classes.
struct ChainComplex {
  IntMatrix boundary2;  // 2n x n, column q is the boundary of square q
  IntMatrix boundary1;  // V x 2n, column e is head(e) - tail(e)
};

ChainComplex chain_complex(const BacfiSurface& s);

/// Basis of H1 given by closed edge paths. Built from a spanning tree of the
/// 1-skeleton and a spanning tree of the dual graph; each of the 2g leftover
/// edges closes up through the tree to one basis cycle.
class H1Basis {
 public:
  /// seed = nullopt gives the deterministic breadth-first trees; any seed
  /// shuffles the tree choice (used to test basis independence).
  explicit H1Basis(const BacfiSurface& s, std::optional<std::uint64_t> seed = std::nullopt);

  int dimension() const noexcept { return static_cast<int>(cycles_.size()); }
  const std::vector<Chain>& cycles() const noexcept { return cycles_; }

  /// Coordinates of a 1-cycle in the basis. The input must be closed.
  std::vector<BigInt> coordinates(const Chain& cycle) const;

 private:
  struct DualStep {
    int square;
    int parent;
    int edge;
  };

  std::vector<Chain> square_boundaries_;
  std::vector<int> leftover_;         // generator edge per basis cycle
  std::vector<DualStep> dual_order_;  // dual tree, parents before children
  int dual_root_ = 0;
  std::vector<Chain> cycles_;
};

struct H1Matrix {
  std::vector<Chain> basis;
  IntMatrix matrix;  // column j = image of basis[j]
  int dimension() const noexcept { return matrix.rows(); }
};

/// Induced action on H1. Throws ChainMapInvalid if f does not commute with
/// the boundary.
H1Matrix h1_matrix(const BacfiSurface& s, const CellularChainMap& f,
                   std::optional<std::uint64_t> seed = std::nullopt);

/// Holonomy of a 1-chain: (sum of horizontal coefficients, sum of vertical
/// coefficients). Boundaries of squares have zero period, so this is a
/// homomorphism on H1.
std::pair<BigInt, BigInt> period(const BacfiSurface& s, const Chain& c);

/// Rank of H1 computed from the chain complex by exact elimination.
int h1_rank(const ChainComplex& cx);

}  // namespace bacfi
