#pragma once

#include <string>

#include <json.hpp>

#include "bacfi/divide.hpp"
#include "bacfi/polynomial.hpp"
#include "bacfi/roots.hpp"
#include "bacfi/surface.hpp"
#include "bacfi/traintrack.hpp"

namespace bacfi {

inline constexpr const char* kReportSchema = "bacfi-report/1";

using Json = nlohmann::ordered_json;

std::string rational_string(const Rational& r);

Json surface_summary_json(const BacfiSurface& s);
Json polynomial_json(const IntPolynomial& p);
Json classification_json(const RootClassification& rc);
Json orbifold_json(const Orbifold& orb, const DivideStats& stats);
Json certificate_json(const ConeCertificate& cert);
Json torus_word_json(const BacfiSurface& s);

/// Each report is an object tagged with "schema" and "kind".
Json info_report(const BacfiSurface& s);
Json monodromy_report(const BacfiSurface& s);
Json orbifold_report(const BacfiSurface& s);
Json certificate_report(const BacfiSurface& s);
Json torus_word_report(const BacfiSurface& s);
Json classify_report(const IntPolynomial& p);

/// Plain-text rendering of any of the reports above.
std::string render_text(const Json& report);

}  // namespace bacfi
