#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bacfi/bigint.hpp"
#include "bacfi/surface.hpp"

namespace bacfi {

/// Edge-end of the fat graph: end id 2e is the left end of edge e, 2e + 1
/// its right end. Edges are cooriented from left to right.
inline int left_end(int edge) { return 2 * edge; }
inline int right_end(int edge) { return 2 * edge + 1; }
inline int end_edge(int end) { return end / 2; }
inline bool is_right_end(int end) { return end % 2 == 1; }
inline int opposite_end(int end) { return end ^ 1; }

struct DivideVertex {
  std::vector<int> cyclic;  // edge-ends in counterclockwise order
  bool uturn = false;       // valence-2 order-2 point where the curve turns back
};

enum class FaceColor { Black, White };

struct Face {
  std::vector<int> arrivals;  // ends through which the boundary walk enters a vertex
  FaceColor color;
  int cone_order;  // 1 when there is no cone point
};

/// Cooriented fat graph whose complementary discs carry cone orders.
class Divide {
 public:
  /// Checks valences, traces and colours faces. Throws NotFourValent,
  /// NotCheckerboardColorable, BacfiViolation or MalformedDocument.
  Divide(int edge_count, std::vector<DivideVertex> vertices, std::map<int, int> cone_orders);

  int edge_count() const noexcept { return edge_count_; }
  const std::vector<DivideVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }

  /// Vertex holding an end and the end's position in its cyclic list.
  int vertex_of(int end) const { return vertex_of_[end]; }
  /// The end after `end` in counterclockwise order around its vertex.
  int next_ccw(int end) const { return next_[end]; }
  /// Face walked when arriving through `end`.
  int face_of(int end) const { return face_of_[end]; }

  int uturn_count() const;

 private:
  int edge_count_;
  std::vector<DivideVertex> vertices_;
  std::vector<int> vertex_of_;
  std::vector<int> next_;
  std::vector<int> face_of_;
  std::vector<Face> faces_;
};

struct DivideStats {
  int d_gamma;           // vertices, double points and U-turn points alike
  int components;        // #gamma
  int c;                 // components avoiding U-turn points
  int d;                 // components through U-turn points
  int boundary_count;    // 2c + d
  int genus_formula;     // d_gamma - components + 1
  int uturns;
};

struct Orbifold {
  int genus;
  std::vector<int> cone_points;  // sorted
  Rational euler_orb;
  bool hyperbolic;
  struct FaceInfo {
    FaceColor color;
    int size;
    int cone_order;
  };
  std::vector<FaceInfo> face_profile;
  std::vector<std::string> warnings;
};

/// Edges are squares; vertices are NE-orbits; black faces are horizontal
/// cylinders and white faces vertical ones.
Divide surface_to_divide(const BacfiSurface& s);

DivideStats divide_stats(const Divide& dv);

Orbifold divide_orbifold(const Divide& dv);
Orbifold divide_to_orbifold(const BacfiSurface& s);

/// Inverse construction: E(s) = edge after the right end of s, N(t) = edge
/// after the left end of t, exponents = cone orders.
BacfiSurface divide_to_surface(const Divide& dv);

nlohmann::ordered_json divide_to_json(const Divide& dv);
Divide divide_from_json(const nlohmann::json& doc);
Divide parse_divide(std::string_view document);

std::string_view to_string(FaceColor c);

}  // namespace bacfi
