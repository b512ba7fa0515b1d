#include "bacfi/traintrack.hpp"

#include <algorithm>
#include <cmath>

#include "bacfi/error.hpp"

namespace bacfi {

std::string_view to_string(TrackColor c) {
  switch (c) {
    case TrackColor::Red: return "red";
    case TrackColor::Green: return "green";
    case TrackColor::Blue: return "blue";
  }
  return "?";
}

int TrainTrack::count(TrackColor c) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [c](const TrackEdge& e) { return e.color == c; }));
}

TrainTrack build_train_track(const Divide& dv) {
  if (dv.uturn_count() > 0) {
    throw Error(ErrorKind::UTurnUnsupported,
                "the divide has " + std::to_string(dv.uturn_count()) + " U-turn point(s); no train track is built");
  }
  TrainTrack t;
  t.vertex_count = 2 * dv.edge_count();
  for (int e = 0; e < dv.edge_count(); ++e) t.edges.push_back({TrackColor::Red, track_left(e), track_right(e)});
  for (const auto& v : dv.vertices()) {
    const auto& cyc = v.cyclic;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int x = cyc[i];
      const int y = cyc[(i + 1) % cyc.size()];
      if (is_right_end(x)) {
        t.edges.push_back({TrackColor::Blue, track_right(end_edge(x)), track_left(end_edge(y))});
      } else {
        t.edges.push_back({TrackColor::Green, track_left(end_edge(x)), track_right(end_edge(y))});
      }
    }
  }
  return t;
}

IntMatrix lower_bound_type_matrix() {
  // rows: image type, columns: source type
  return IntMatrix{{2, 0, 1}, {3, 0, 2}, {0, 1, 0}};
}

std::array<Rational, 3> cover_ratios(const IntMatrix& m, const std::array<int, 3>& w) {
  std::array<Rational, 3> out;
  for (int t = 0; t < 3; ++t) {
    BigInt total = 0;
    for (int r = 0; r < 3; ++r) total += w[r] * m(r, t);
    out[t] = Rational(total, w[t]);
  }
  return out;
}

double power_iteration(const IntMatrix& m, int iterations) {
  const int n = m.rows();
  std::vector<double> x(n, 1.0);
  double lambda = 0;
  for (int it = 0; it < iterations; ++it) {
    std::vector<double> y(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) y[i] += m(i, j).convert_to<double>() * x[j];
    double norm = 0;
    for (double v : y) norm = std::max(norm, std::abs(v));
    if (norm == 0) return 0;
    double num = 0, den = 0;
    for (int i = 0; i < n; ++i) {
      num += y[i] * x[i];
      den += x[i] * x[i];
    }
    lambda = num / den;
    for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  return lambda;
}

ConeCertificate cone_certificate(const BacfiSurface& s, std::optional<IntMatrix> type_matrix) {
  ConeCertificate cert;
  for (const auto& c : cylinders(s, CylinderKind::Horizontal)) cert.horizontal_widths.push_back(c.width);
  for (const auto& c : cylinders(s, CylinderKind::Vertical)) cert.vertical_widths.push_back(c.width);
  for (int q = 0; q < s.size(); ++q)
    if (s.north_east(q) == q) ++cert.uturns;

  const int narrowest_h = *std::min_element(cert.horizontal_widths.begin(), cert.horizontal_widths.end());
  const int narrowest_v = *std::min_element(cert.vertical_widths.begin(), cert.vertical_widths.end());
  if (narrowest_h < 5) cert.reasons.push_back("a horizontal cylinder has width " + std::to_string(narrowest_h) + " < 5");
  if (narrowest_v < 5) cert.reasons.push_back("a vertical cylinder has width " + std::to_string(narrowest_v) + " < 5");
  if (cert.uturns > 0) cert.reasons.push_back(std::to_string(cert.uturns) + " U-turn point(s)");
  cert.applicable = cert.reasons.empty();

  cert.type_matrix = type_matrix ? *type_matrix : lower_bound_type_matrix();
  if (cert.type_matrix.rows() != 3 || cert.type_matrix.cols() != 3) {
    throw Error(ErrorKind::MalformedDocument, "type matrix must be 3x3");
  }
  cert.composite = cert.type_matrix * cert.type_matrix;
  cert.ratios = cover_ratios(cert.composite, cert.weights);
  int arg = 0;
  for (int t = 1; t < 3; ++t)
    if (cert.ratios[t] < cert.ratios[arg]) arg = t;
  cert.min_ratio = cert.ratios[arg];
  cert.min_ratio_type = static_cast<TrackColor>(arg);
  cert.pf_estimate_approx = power_iteration(cert.composite);

  if (!cert.applicable) {
    cert.verdict = "inapplicable";
  } else if (cert.min_ratio >= Rational(5, 2)) {
    cert.verdict = "pseudo-Anosov, λ ≥ 5/2";
  } else {
    cert.verdict = "inconclusive";
  }
  return cert;
}

}  // namespace bacfi
