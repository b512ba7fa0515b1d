#include "bacfi/surface.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "bacfi/error.hpp"

namespace bacfi {
namespace {

void require_permutation(const std::vector<int>& p, const char* name) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> hit(n, false);
  for (int q = 0; q < n; ++q) {
    const int v = p[q];
    if (v < 0 || v >= n || hit[v]) {
      std::ostringstream msg;
      msg << name << " is not a permutation of 0.." << n - 1 << " (entry " << q << " = " << v << ")";
      throw Error(ErrorKind::NotAPermutation, msg.str());
    }
    hit[v] = true;
  }
}

std::vector<int> invert(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

std::vector<std::vector<int>> orbits(const std::vector<int>& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t q = 0; q < p.size(); ++q) {
    if (seen[q]) continue;
    std::vector<int> orbit;
    for (int x = static_cast<int>(q); !seen[x]; x = p[x]) {
      seen[x] = true;
      orbit.push_back(x);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

void check_cylinder_exponents(const std::vector<int>& perm, const std::vector<int>& exps,
                              const char* kind) {
  for (const auto& orbit : orbits(perm)) {
    const int e = exps[orbit.front()];
    for (int q : orbit) {
      if (exps[q] != e) {
        std::ostringstream msg;
        msg << kind << " exponent differs inside the cylinder of square " << orbit.front()
            << " (square " << q << ")";
        throw Error(ErrorKind::ExponentNotCylinderConstant, msg.str());
      }
    }
    const long long product = static_cast<long long>(e) * static_cast<long long>(orbit.size());
    if (product < 2) {
      std::ostringstream msg;
      msg << kind << " cylinder of square " << orbit.front() << " has exponent*width = " << product
          << " < 2";
      throw Error(ErrorKind::ExponentTooSmall, msg.str());
    }
  }
}

}  // namespace

BacfiSurface BacfiSurface::make(std::vector<int> east, std::vector<int> north,
                                std::vector<int> h_exp, std::vector<int> v_exp) {
  const std::size_t n = east.size();
  if (n == 0) throw Error(ErrorKind::MalformedDocument, "a surface needs at least one square");
  if (north.size() != n || h_exp.size() != n || v_exp.size() != n) {
    throw Error(ErrorKind::MalformedDocument, "east, north, h_exp and v_exp must all have length n");
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (h_exp[q] < 1 || v_exp[q] < 1) {
      throw Error(ErrorKind::MalformedDocument,
                  "exponents must be positive (square " + std::to_string(q) + ")");
    }
  }
  require_permutation(east, "east");
  require_permutation(north, "north");

  for (std::size_t q = 0; q < n; ++q) {
    const int x = north[east[north[east[q]]]];
    if (x != static_cast<int>(q)) {
      throw Error(ErrorKind::BacfiViolation,
                  "witness square " + std::to_string(q) + ": NENE(" + std::to_string(q) + ") = " + std::to_string(x));
    }
  }

  std::vector<bool> seen(n, false);
  std::queue<int> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    const int q = todo.front();
    todo.pop();
    for (int next : {east[q], north[q]}) {
      if (!seen[next]) {
        seen[next] = true;
        ++reached;
        todo.push(next);
      }
    }
  }
  if (reached != n) {
    throw Error(ErrorKind::NotConnected, "only " + std::to_string(reached) + " of " +
                                             std::to_string(n) + " squares reachable from square 0");
  }

  check_cylinder_exponents(east, h_exp, "horizontal");
  check_cylinder_exponents(north, v_exp, "vertical");

  BacfiSurface s;
  s.west_ = invert(east);
  s.south_ = invert(north);
  s.east_ = std::move(east);
  s.north_ = std::move(north);
  s.h_exp_ = std::move(h_exp);
  s.v_exp_ = std::move(v_exp);
  return s;
}

std::vector<Cylinder> cylinders(const BacfiSurface& s, CylinderKind kind) {
  const bool horizontal = kind == CylinderKind::Horizontal;
  std::vector<Cylinder> out;
  for (auto& orbit : orbits(horizontal ? s.east_perm() : s.north_perm())) {
    const int width = static_cast<int>(orbit.size());
    const int exponent = horizontal ? s.h_exp(orbit.front()) : s.v_exp(orbit.front());
    out.push_back(Cylinder{kind, std::move(orbit), width, exponent});
  }
  return out;
}

std::vector<VertexClass> vertex_classes(const BacfiSurface& s) {
  std::vector<int> rho(s.size());
  for (int q = 0; q < s.size(); ++q) rho[q] = s.north(s.east(s.south(s.west(q))));
  std::vector<VertexClass> out;
  for (auto& orbit : orbits(rho)) {
    const int k = static_cast<int>(orbit.size());
    out.push_back(VertexClass{std::move(orbit), k});
  }
  return out;
}

std::vector<int> vertex_index(const BacfiSurface& s) {
  std::vector<int> index(s.size());
  const auto classes = vertex_classes(s);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int q : classes[c].corner_squares) index[q] = static_cast<int>(c);
  }
  return index;
}

int genus_from_euler(const BacfiSurface& s) {
  const int vertices = static_cast<int>(vertex_classes(s).size());
  const int euler = vertices - 2 * s.size() + s.size();
  return (2 - euler) / 2;
}

int horizontal_width(const BacfiSurface& s, int q) {
  int w = 1;
  for (int x = s.east(q); x != q; x = s.east(x)) ++w;
  return w;
}

int vertical_height(const BacfiSurface& s, int q) {
  int h = 1;
  for (int x = s.north(q); x != q; x = s.north(x)) ++h;
  return h;
}

BacfiSurface surface_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::MalformedDocument, "surface document must be an object");
  auto int_array = [&](const char* key) {
    if (!doc.contains(key) || !doc.at(key).is_array()) {
      throw Error(ErrorKind::MalformedDocument, std::string("missing array field '") + key + "'");
    }
    std::vector<int> out;
    for (const auto& v : doc.at(key)) {
      if (!v.is_number_integer()) {
        throw Error(ErrorKind::MalformedDocument, std::string("non-integer entry in '") + key + "'");
      }
      out.push_back(v.get<int>());
    }
    return out;
  };
  if (!doc.contains("squares") || !doc.at("squares").is_number_integer()) {
    throw Error(ErrorKind::MalformedDocument, "missing integer field 'squares'");
  }
  const long long n = doc.at("squares").get<long long>();
  if (n < 1) throw Error(ErrorKind::MalformedDocument, "'squares' must be at least 1");
  auto east = int_array("east");
  auto north = int_array("north");
  auto h_exp = int_array("h_exp");
  auto v_exp = int_array("v_exp");
  for (const auto* arr : {&east, &north, &h_exp, &v_exp}) {
    if (static_cast<long long>(arr->size()) != n) {
      throw Error(ErrorKind::MalformedDocument, "array length differs from 'squares'");
    }
  }
  return BacfiSurface::make(std::move(east), std::move(north), std::move(h_exp), std::move(v_exp));
}

std::optional<std::vector<int>> find_isomorphism(const BacfiSurface& a, const BacfiSurface& b) {
  const int n = a.size();
  if (b.size() != n) return std::nullopt;
  for (int target = 0; target < n; ++target) {
    std::vector<int> phi(n, -1);
    std::vector<bool> used(n, false);
    phi[0] = target;
    used[target] = true;
    std::queue<int> todo;
    todo.push(0);
    bool ok = true;
    while (ok && !todo.empty()) {
      const int q = todo.front();
      todo.pop();
      if (a.h_exp(q) != b.h_exp(phi[q]) || a.v_exp(q) != b.v_exp(phi[q])) {
        ok = false;
        break;
      }
      const std::pair<int, int> steps[] = {{a.east(q), b.east(phi[q])}, {a.north(q), b.north(phi[q])},
                                           {a.west(q), b.west(phi[q])}, {a.south(q), b.south(phi[q])}};
      for (const auto& [from, to] : steps) {
        if (phi[from] == -1) {
          if (used[to]) {
            ok = false;
            break;
          }
          phi[from] = to;
          used[to] = true;
          todo.push(from);
        } else if (phi[from] != to) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return phi;
  }
  return std::nullopt;
}

BacfiSurface parse_surface(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::MalformedDocument, e.what());
  }
  return surface_from_json(doc);
}

nlohmann::json surface_to_json(const BacfiSurface& s) {
  nlohmann::json doc;
  doc["squares"] = s.size();
  doc["east"] = s.east_perm();
  doc["north"] = s.north_perm();
  doc["h_exp"] = s.h_exps();
  doc["v_exp"] = s.v_exps();
  return doc;
}

std::string serialize_surface(const BacfiSurface& s) {
  nlohmann::ordered_json doc;
  doc["squares"] = s.size();
  doc["east"] = s.east_perm();
  doc["north"] = s.north_perm();
  doc["h_exp"] = s.h_exps();
  doc["v_exp"] = s.v_exps();
  return doc.dump() + "\n";
}

}  // namespace bacfi
