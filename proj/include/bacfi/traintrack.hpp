#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bacfi/bigint.hpp"
#include "bacfi/divide.hpp"
#include "bacfi/int_matrix.hpp"
#include "bacfi/surface.hpp"

namespace bacfi {

enum class TrackColor { Red, Green, Blue };

std::string_view to_string(TrackColor c);

struct TrackEdge {
  TrackColor color;
  int from;
  int to;
};

/// Track vertex ids: v_l(e) = 2e and v_r(e) = 2e + 1.
inline int track_left(int edge) { return 2 * edge; }
inline int track_right(int edge) { return 2 * edge + 1; }

/// One red edge across each divide edge, and at every double point one edge
/// per corner: blue in black corners, green in white ones.
struct TrainTrack {
  int vertex_count = 0;
  std::vector<TrackEdge> edges;

  int count(TrackColor c) const;
};

/// Throws UTurnUnsupported when the divide has order-2 points.
TrainTrack build_train_track(const Divide& dv);

/// Lower-bound image counts per edge type, columns are images in the basis
/// (red, green, blue): red -> 2 red + 3 green, green -> 1 blue,
/// blue -> 1 red + 2 green.
IntMatrix lower_bound_type_matrix();

struct ConeCertificate {
  bool applicable = false;
  std::vector<std::string> reasons;  // why it does not apply
  std::vector<int> horizontal_widths;
  std::vector<int> vertical_widths;
  int uturns = 0;
  IntMatrix type_matrix;
  IntMatrix composite;
  std::array<int, 3> weights{1, 2, 1};
  std::array<Rational, 3> ratios;
  Rational min_ratio;
  TrackColor min_ratio_type = TrackColor::Red;
  double pf_estimate_approx = 0;
  std::string verdict;
};

/// Cover ratios (w^T M e_t) / w_t of a 3x3 type-level matrix.
std::array<Rational, 3> cover_ratios(const IntMatrix& m, const std::array<int, 3>& w);

/// Dominant eigenvalue of a nonnegative matrix by power iteration.
double power_iteration(const IntMatrix& m, int iterations = 500);

/// Checks the width >= 5 hypothesis and evaluates the covering argument on
/// `type_matrix` (default: the lower-bound table).
ConeCertificate cone_certificate(const BacfiSurface& s, std::optional<IntMatrix> type_matrix = std::nullopt);

}  // namespace bacfi
