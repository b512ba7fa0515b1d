#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace bacfi {

/// A square-tiled surface given by east/north neighbour permutations on
/// squares 0..n-1, with per-square antitwist exponents. Instances are always
/// valid: the only way to obtain one is `BacfiSurface::make`, which checks
/// the permutation, NENE = id, connectivity and exponent invariants.
class BacfiSurface {
 public:
  static BacfiSurface make(std::vector<int> east, std::vector<int> north,
                           std::vector<int> h_exp, std::vector<int> v_exp);

  int size() const noexcept { return static_cast<int>(east_.size()); }

  int east(int q) const { return east_[q]; }
  int north(int q) const { return north_[q]; }
  int west(int q) const { return west_[q]; }
  int south(int q) const { return south_[q]; }
  /// North neighbour of the east neighbour; an involution on squares.
  int north_east(int q) const { return north_[east_[q]]; }

  int h_exp(int q) const { return h_exp_[q]; }
  int v_exp(int q) const { return v_exp_[q]; }

  const std::vector<int>& east_perm() const noexcept { return east_; }
  const std::vector<int>& north_perm() const noexcept { return north_; }
  const std::vector<int>& h_exps() const noexcept { return h_exp_; }
  const std::vector<int>& v_exps() const noexcept { return v_exp_; }

  friend bool operator==(const BacfiSurface&, const BacfiSurface&) = default;

 private:
  BacfiSurface() = default;

  std::vector<int> east_, north_, west_, south_;
  std::vector<int> h_exp_, v_exp_;
};

enum class CylinderKind { Horizontal, Vertical };

struct Cylinder {
  CylinderKind kind;
  std::vector<int> squares;  // cyclic order, starting at the minimal index
  int width;
  int exponent;
};

struct VertexClass {
  std::vector<int> corner_squares;  // one cycle of NESW, starting at its minimum
  int cone_angle_turns;
};

/// Orbits of east (horizontal) or north (vertical), sorted by minimal square.
std::vector<Cylinder> cylinders(const BacfiSurface& s, CylinderKind kind);

/// Cycles of the corner rotation q -> N(E(S(W(q)))), each one a vertex of
/// the square tiling.
std::vector<VertexClass> vertex_classes(const BacfiSurface& s);

/// Map square -> index of the vertex class holding its south-west corner.
std::vector<int> vertex_index(const BacfiSurface& s);

int genus_from_euler(const BacfiSurface& s);

/// Length of the east (resp. north) orbit of q.
int horizontal_width(const BacfiSurface& s, int q);
int vertical_height(const BacfiSurface& s, int q);

/// A relabeling phi with phi(E(q)) = E'(phi(q)), phi(N(q)) = N'(phi(q)) and
/// matching exponents, if one exists. Connectivity makes phi determined by
/// the image of square 0, so at most n candidates are tried.
std::optional<std::vector<int>> find_isomorphism(const BacfiSurface& a, const BacfiSurface& b);

BacfiSurface parse_surface(std::string_view document);
BacfiSurface surface_from_json(const nlohmann::json& doc);
nlohmann::json surface_to_json(const BacfiSurface& s);
std::string serialize_surface(const BacfiSurface& s);

}  // namespace bacfi
