#include "bacfi/report.hpp"

#include <sstream>

#include "bacfi/antitwist.hpp"
#include "bacfi/error.hpp"
#include "bacfi/homology.hpp"
#include "bacfi/sl2.hpp"

namespace bacfi {
namespace {

Json header(const char* kind) {
  Json j;
  j["schema"] = kReportSchema;
  j["kind"] = kind;
  return j;
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.to_strings()) rows.push_back(row);
  return rows;
}

Json interval_json(const RootInterval& iv) {
  Json j;
  j["lo"] = rational_string(iv.lo);
  j["hi"] = rational_string(iv.hi);
  j["lo_approx"] = iv.lo.convert_to<double>();
  j["hi_approx"] = iv.hi.convert_to<double>();
  return j;
}

Json cylinders_json(const BacfiSurface& s, CylinderKind kind) {
  Json out = Json::array();
  for (const auto& c : cylinders(s, kind)) {
    Json j;
    j["squares"] = c.squares;
    j["width"] = c.width;
    j["exponent"] = c.exponent;
    out.push_back(std::move(j));
  }
  return out;
}

std::string irreducibility_status(const Irreducibility& irr) {
  switch (irr.status) {
    case Irreducibility::Status::Certified: return "certified";
    case Irreducibility::Status::Reducible: return "reducible";
    case Irreducibility::Status::Unknown: return "unknown";
  }
  return "unknown";
}

Json exclusion_json(const IntPolynomial& factor) {
  Json j;
  try {
    const ExclusionVerdict v = exclusion_verdict(factor);
    j["polynomial"] = polynomial_json(factor);
    j["no_power_thurston"] = v.no_power_thurston;
    j["no_power_penner"] = v.no_power_penner;
    j["certainty"] = v.certainty();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoRealRootGreaterThanOne) throw;
    j["polynomial"] = polynomial_json(factor);
    j["error"] = std::string(to_string(e.kind()));
  }
  return j;
}

void render(std::ostringstream& os, const Json& j, int indent);

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& v : j)
    if (v.is_structured()) return false;
  return true;
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (is_scalar_array(j)) {
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + scalar_text(j[i]);
    return out + "]";
  }
  return j.dump();
}

void render(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (key == "schema") continue;
      if (value.is_object() || (value.is_array() && !is_scalar_array(value) && !value.empty())) {
        os << pad << key << ":\n";
        render(os, value, indent + 2);
      } else {
        os << pad << key << ": " << scalar_text(value) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_object()) {
        os << pad << "-\n";
        render(os, item, indent + 2);
      } else {
        os << pad << scalar_text(item) << "\n";
      }
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string rational_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Json surface_summary_json(const BacfiSurface& s) {
  Json j;
  j["squares"] = s.size();
  j["genus"] = genus_from_euler(s);
  j["horizontal_cylinders"] = cylinders_json(s, CylinderKind::Horizontal);
  j["vertical_cylinders"] = cylinders_json(s, CylinderKind::Vertical);
  Json classes = Json::array();
  for (const auto& v : vertex_classes(s)) {
    Json c;
    c["corners"] = v.corner_squares;
    c["cone_angle_turns"] = v.cone_angle_turns;
    classes.push_back(std::move(c));
  }
  j["vertex_class_count"] = classes.size();
  j["vertex_classes"] = std::move(classes);
  return j;
}

Json polynomial_json(const IntPolynomial& p) {
  Json j;
  j["text"] = p.to_string();
  j["coefficients"] = p.coeff_strings();
  j["degree"] = p.degree();
  return j;
}

Json classification_json(const RootClassification& rc) {
  Json j;
  j["degree"] = rc.degree;
  j["real_count"] = rc.real_count;
  j["unit_circle_count"] = rc.unit_circle_count;
  j["other_count"] = rc.other_count;
  j["reciprocal"] = rc.reciprocal;
  j["square_free_input"] = rc.square_free_input;
  j["largest_real_root"] = rc.largest_real_root ? interval_json(*rc.largest_real_root) : Json();
  Json irr;
  irr["status"] = irreducibility_status(rc.irreducibility);
  irr["method"] = rc.irreducibility.method;
  irr["prime"] = rc.irreducibility.prime ? Json(*rc.irreducibility.prime) : Json();
  irr["sieve_primes"] = rc.irreducibility.sieve_primes;
  j["irreducibility"] = std::move(irr);
  return j;
}

Json orbifold_json(const Orbifold& orb, const DivideStats& st) {
  Json j;
  j["genus"] = orb.genus;
  j["cone_points"] = orb.cone_points;
  j["euler_orb"] = rational_string(orb.euler_orb);
  j["euler_orb_approx"] = orb.euler_orb.convert_to<double>();
  j["hyperbolic"] = orb.hyperbolic;
  Json faces = Json::array();
  for (const auto& f : orb.face_profile) {
    Json fj;
    fj["color"] = to_string(f.color);
    fj["size"] = f.size;
    fj["cone_order"] = f.cone_order;
    faces.push_back(std::move(fj));
  }
  j["face_profile"] = std::move(faces);
  j["warnings"] = orb.warnings;
  Json d;
  d["d_gamma"] = st.d_gamma;
  d["components"] = st.components;
  d["c"] = st.c;
  d["d"] = st.d;
  d["boundary_count"] = st.boundary_count;
  d["genus_formula"] = st.genus_formula;
  d["uturns"] = st.uturns;
  j["divide"] = std::move(d);
  return j;
}

Json certificate_json(const ConeCertificate& cert) {
  Json j;
  j["applicable"] = cert.applicable;
  j["reasons"] = cert.reasons;
  Json widths;
  widths["horizontal"] = cert.horizontal_widths;
  widths["vertical"] = cert.vertical_widths;
  j["widths"] = std::move(widths);
  j["uturns"] = cert.uturns;
  j["basis"] = {"red", "green", "blue"};
  j["weights"] = cert.weights;
  j["type_matrix"] = matrix_json(cert.type_matrix);
  j["composite"] = matrix_json(cert.composite);
  Json ratios;
  for (int t = 0; t < 3; ++t) ratios[std::string(to_string(static_cast<TrackColor>(t)))] = rational_string(cert.ratios[t]);
  j["ratios"] = std::move(ratios);
  j["min_ratio"] = rational_string(cert.min_ratio);
  j["min_ratio_type"] = to_string(cert.min_ratio_type);
  j["pf_estimate_approx"] = cert.pf_estimate_approx;
  j["verdict"] = cert.verdict;
  return j;
}

Json torus_word_json(const BacfiSurface& s) {
  const TorusWord tw = torus_word(s);
  Json j;
  j["word"] = tw.word.word;
  j["compact"] = compact_word(tw.word.word);
  j["matrix"] = matrix_json(tw.h1);
  j["trace"] = tw.h1.trace().str();
  j["conjugator"] = matrix_json(tw.word.conjugator);
  j["orientation"] = tw.orientation_flipped ? "flipped by diag(1,-1)" : "as computed";
  j["mirror_word"] = tw.mirror_word;
  return j;
}

Json info_report(const BacfiSurface& s) {
  Json j = header("info");
  j["surface"] = surface_summary_json(s);
  const DivideStats st = divide_stats(surface_to_divide(s));
  j["genus_formula"] = st.genus_formula;
  return j;
}

Json monodromy_report(const BacfiSurface& s) {
  Json j = header("monodromy");
  j["surface"] = surface_summary_json(s);

  const H1Matrix h = h1_matrix(s, monodromy(s));
  Json h1;
  h1["dimension"] = h.dimension();
  h1["matrix"] = matrix_json(h.matrix);
  h1["trace"] = h.matrix.trace().str();
  h1["determinant"] = h.matrix.determinant().str();
  j["h1"] = std::move(h1);

  const IntPolynomial cp = char_poly(h.matrix);
  Json cpj = polynomial_json(cp);
  cpj["reciprocal"] = cp.is_reciprocal();
  j["char_poly"] = std::move(cpj);
  j["roots"] = classification_json(classify_roots(cp));

  const auto pieces = split_factors(cp);
  Json factors = Json::array();
  for (const auto& piece : pieces) {
    Json f = polynomial_json(piece.factor);
    f["kind"] = piece.kind;
    f["classification"] = classification_json(piece.classification);
    factors.push_back(std::move(f));
  }
  j["factors"] = std::move(factors);

  const auto best = stretch_factor_piece(pieces);
  if (best) {
    Json sf;
    sf["factor"] = polynomial_json(pieces[*best].factor);
    sf["enclosure"] = interval_json(*pieces[*best].classification.largest_real_root);
    j["stretch_factor"] = std::move(sf);
    j["exclusion"] = exclusion_json(pieces[*best].factor);
  } else {
    j["stretch_factor"] = Json();
    j["exclusion"] = Json();
  }

  if (genus_from_euler(s) == 1) {
    try {
      j["torus_word"] = torus_word_json(s);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TraceTooSmall) throw;
      Json tw;
      tw["error"] = std::string(to_string(e.kind()));
      j["torus_word"] = std::move(tw);
    }
  } else {
    j["torus_word"] = Json();
  }

  const Divide dv = surface_to_divide(s);
  j["orbifold"] = orbifold_json(divide_orbifold(dv), divide_stats(dv));
  j["certificate"] = certificate_json(cone_certificate(s));
  return j;
}

Json orbifold_report(const BacfiSurface& s) {
  Json j = header("orbifold");
  const Divide dv = surface_to_divide(s);
  j["orbifold"] = orbifold_json(divide_orbifold(dv), divide_stats(dv));
  return j;
}

Json certificate_report(const BacfiSurface& s) {
  Json j = header("certificate");
  j["certificate"] = certificate_json(cone_certificate(s));
  return j;
}

Json torus_word_report(const BacfiSurface& s) {
  Json j = header("torus-word");
  j["torus_word"] = torus_word_json(s);
  return j;
}

Json classify_report(const IntPolynomial& p) {
  Json j = header("classify");
  j["polynomial"] = polynomial_json(p);
  j["roots"] = classification_json(classify_roots(p));
  j["exclusion"] = exclusion_json(p);
  return j;
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(os, report, 0);
  return os.str();
}

}  // namespace bacfi
