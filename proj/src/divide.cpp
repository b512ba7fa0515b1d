#include "bacfi/divide.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "bacfi/error.hpp"

namespace bacfi {
namespace {

std::string end_name(int end) {
  return std::to_string(end_edge(end)) + (is_right_end(end) ? "R" : "L");
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

}  // namespace

std::string_view to_string(FaceColor c) { return c == FaceColor::Black ? "black" : "white"; }

Divide::Divide(int edge_count, std::vector<DivideVertex> vertices, std::map<int, int> cone_orders)
    : edge_count_(edge_count), vertices_(std::move(vertices)) {
  if (edge_count_ < 1) throw Error(ErrorKind::MalformedDocument, "a divide needs at least one edge");
  const int ends = 2 * edge_count_;
  vertex_of_.assign(ends, -1);
  next_.assign(ends, -1);

  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const auto& cyc = vertices_[v].cyclic;
    const std::size_t want = vertices_[v].uturn ? 2 : 4;
    if (cyc.size() != want) {
      std::ostringstream msg;
      msg << "vertex " << v << " has valence " << cyc.size() << ", expected " << want
          << (vertices_[v].uturn ? " for a U-turn point" : "");
      throw Error(ErrorKind::NotFourValent, msg.str());
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int end = cyc[i];
      if (end < 0 || end >= ends) {
        throw Error(ErrorKind::MalformedDocument, "vertex " + std::to_string(v) + " refers to a missing edge");
      }
      if (vertex_of_[end] != -1) {
        throw Error(ErrorKind::MalformedDocument, "edge end " + end_name(end) + " is attached twice");
      }
      vertex_of_[end] = static_cast<int>(v);
      next_[end] = cyc[(i + 1) % cyc.size()];
    }
  }
  for (int end = 0; end < ends; ++end) {
    if (vertex_of_[end] == -1) {
      throw Error(ErrorKind::MalformedDocument, "edge end " + end_name(end) + " is not attached to a vertex");
    }
  }

  // boundary walks: arrive through x, leave along the next end counterclockwise
  face_of_.assign(ends, -1);
  for (int e = 0; e < edge_count_; ++e) {
    for (int start : {right_end(e), left_end(e)}) {
      if (face_of_[start] != -1) continue;
      const int index = static_cast<int>(faces_.size());
      Face face{{}, FaceColor::Black, 1};
      for (int x = start; face_of_[x] == -1; x = opposite_end(next_[x])) {
        face_of_[x] = index;
        face.arrivals.push_back(x);
      }
      faces_.push_back(std::move(face));
    }
  }

  // two-colour the faces across edges
  const int face_count = static_cast<int>(faces_.size());
  std::vector<std::vector<int>> adjacent(face_count);
  for (int e = 0; e < edge_count_; ++e) {
    const int a = face_of_[right_end(e)];
    const int b = face_of_[left_end(e)];
    if (a == b) {
      throw Error(ErrorKind::NotCheckerboardColorable,
                  "face " + std::to_string(a) + " lies on both sides of edge " + std::to_string(e));
    }
    adjacent[a].push_back(b);
    adjacent[b].push_back(a);
  }
  std::vector<int> colour(face_count, -1);
  for (int root = 0; root < face_count; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::queue<int> bfs;
    bfs.push(root);
    while (!bfs.empty()) {
      const int f = bfs.front();
      bfs.pop();
      for (int g : adjacent[f]) {
        if (colour[g] == -1) {
          colour[g] = 1 - colour[f];
          bfs.push(g);
        } else if (colour[g] == colour[f]) {
          throw Error(ErrorKind::NotCheckerboardColorable,
                      "faces " + std::to_string(f) + " and " + std::to_string(g) + " are adjacent across an odd cycle");
        }
      }
    }
  }

  // coorientation: black faces see right ends, white faces left ends
  for (int f = 0; f < face_count; ++f) {
    auto& face = faces_[f];
    const bool right = is_right_end(face.arrivals.front());
    for (int x : face.arrivals) {
      if (is_right_end(x) != right) {
        throw Error(ErrorKind::BacfiViolation,
                    "face " + std::to_string(f) + " meets both left and right ends; the coorientations disagree");
      }
    }
    face.color = right ? FaceColor::Black : FaceColor::White;
  }

  for (const auto& [index, order] : cone_orders) {
    if (index < 0 || index >= face_count) {
      throw Error(ErrorKind::MalformedDocument, "cone order given for unknown face " + std::to_string(index));
    }
    if (order < 1) throw Error(ErrorKind::MalformedDocument, "cone orders must be positive");
    faces_[index].cone_order = order;
  }
}

int Divide::uturn_count() const {
  return static_cast<int>(std::count_if(vertices_.begin(), vertices_.end(), [](const auto& v) { return v.uturn; }));
}

Divide surface_to_divide(const BacfiSurface& s) {
  const int n = s.size();
  std::vector<DivideVertex> vertices;
  for (int q = 0; q < n; ++q) {
    const int t = s.north_east(q);
    if (t < q) continue;
    if (t == q) {
      vertices.push_back({{right_end(q), left_end(s.east(q))}, true});
    } else {
      vertices.push_back({{right_end(q), left_end(s.east(q)), right_end(t), left_end(s.east(t))}, false});
    }
  }
  // exponents become cone orders on the faces; resolved after tracing
  Divide bare(n, vertices, {});
  std::map<int, int> cones;
  for (int q = 0; q < n; ++q) {
    if (s.h_exp(q) >= 2) cones[bare.face_of(right_end(q))] = s.h_exp(q);
    if (s.v_exp(q) >= 2) cones[bare.face_of(left_end(q))] = s.v_exp(q);
  }
  return Divide(n, std::move(vertices), std::move(cones));
}

DivideStats divide_stats(const Divide& dv) {
  const int m = dv.edge_count();
  UnionFind uf(m);
  for (const auto& v : dv.vertices()) {
    if (v.uturn) continue;
    uf.join(end_edge(v.cyclic[0]), end_edge(v.cyclic[2]));
    uf.join(end_edge(v.cyclic[1]), end_edge(v.cyclic[3]));
  }
  std::vector<bool> is_root(m, false), through_uturn(m, false);
  for (int e = 0; e < m; ++e) is_root[uf.find(e)] = true;
  for (const auto& v : dv.vertices()) {
    if (!v.uturn) continue;
    for (int end : v.cyclic) through_uturn[uf.find(end_edge(end))] = true;
  }
  DivideStats st{};
  st.d_gamma = static_cast<int>(dv.vertices().size());
  for (int e = 0; e < m; ++e) {
    if (!is_root[e]) continue;
    ++st.components;
    (through_uturn[e] ? st.d : st.c) += 1;
  }
  st.boundary_count = 2 * st.c + st.d;
  st.genus_formula = st.d_gamma - st.components + 1;
  st.uturns = dv.uturn_count();
  return st;
}

Orbifold divide_orbifold(const Divide& dv) {
  Orbifold orb{};
  const int chi = static_cast<int>(dv.vertices().size()) - dv.edge_count() + static_cast<int>(dv.faces().size());
  orb.genus = (2 - chi) / 2;
  Rational euler(chi);
  for (std::size_t f = 0; f < dv.faces().size(); ++f) {
    const Face& face = dv.faces()[f];
    const int size = static_cast<int>(face.arrivals.size());
    orb.face_profile.push_back({face.color, size, face.cone_order});
    if (face.cone_order >= 2) orb.cone_points.push_back(face.cone_order);
    if (size <= 2 && face.cone_order == 1) {
      orb.warnings.push_back("face " + std::to_string(f) + " is an embedded " + std::to_string(size) +
                             "-gon without a cone point");
    }
  }
  for (int i = 0; i < dv.uturn_count(); ++i) orb.cone_points.push_back(2);
  std::sort(orb.cone_points.begin(), orb.cone_points.end());
  for (int p : orb.cone_points) euler -= Rational(1) - Rational(1, p);
  orb.euler_orb = euler;
  orb.hyperbolic = euler < 0;
  return orb;
}

Orbifold divide_to_orbifold(const BacfiSurface& s) { return divide_orbifold(surface_to_divide(s)); }

BacfiSurface divide_to_surface(const Divide& dv) {
  const int m = dv.edge_count();
  std::vector<int> east(m), north(m), h_exp(m), v_exp(m);
  for (int e = 0; e < m; ++e) {
    const int after_right = dv.next_ccw(right_end(e));
    const int after_left = dv.next_ccw(left_end(e));
    if (is_right_end(after_right) || !is_right_end(after_left)) {
      throw Error(ErrorKind::BacfiViolation,
                  "left and right ends do not alternate around the vertex of edge " + std::to_string(e));
    }
    east[e] = end_edge(after_right);
    north[e] = end_edge(after_left);
    h_exp[e] = dv.faces()[dv.face_of(right_end(e))].cone_order;
    v_exp[e] = dv.faces()[dv.face_of(left_end(e))].cone_order;
  }
  return BacfiSurface::make(std::move(east), std::move(north), std::move(h_exp), std::move(v_exp));
}

nlohmann::ordered_json divide_to_json(const Divide& dv) {
  auto end_json = [](int end) {
    return nlohmann::ordered_json::array({end_edge(end), is_right_end(end) ? "R" : "L"});
  };
  nlohmann::ordered_json doc;
  doc["edges"] = dv.edge_count();
  auto verts = nlohmann::ordered_json::array();
  for (const auto& v : dv.vertices()) {
    auto list = nlohmann::ordered_json::array();
    for (int end : v.cyclic) list.push_back(end_json(end));
    nlohmann::ordered_json entry;
    entry[v.uturn ? "uturn" : "cyclic"] = std::move(list);
    verts.push_back(std::move(entry));
  }
  doc["vertices"] = std::move(verts);
  nlohmann::ordered_json cone = nlohmann::ordered_json::object();
  auto faces = nlohmann::ordered_json::array();
  for (std::size_t f = 0; f < dv.faces().size(); ++f) {
    const Face& face = dv.faces()[f];
    if (face.cone_order >= 2) cone[std::to_string(f)] = face.cone_order;
    nlohmann::ordered_json entry;
    entry["index"] = f;
    entry["color"] = to_string(face.color);
    entry["size"] = face.arrivals.size();
    auto edges = nlohmann::ordered_json::array();
    for (int x : face.arrivals) edges.push_back(end_edge(x));
    entry["edges"] = std::move(edges);
    entry["cone_order"] = face.cone_order;
    faces.push_back(std::move(entry));
  }
  doc["cone"] = std::move(cone);
  doc["faces"] = std::move(faces);
  return doc;
}

Divide divide_from_json(const nlohmann::json& doc) {
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::MalformedDocument, msg); };
  if (!doc.is_object()) fail("divide document must be an object");
  if (!doc.contains("edges") || !doc.at("edges").is_number_integer()) fail("missing integer field 'edges'");
  const long long m = doc.at("edges").get<long long>();
  if (m < 1 || m > 1'000'000) fail("'edges' out of range");
  if (!doc.contains("vertices") || !doc.at("vertices").is_array()) fail("missing array field 'vertices'");

  auto parse_end = [&](const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer()) fail("edge ends are [edge, \"L\"|\"R\"]");
    const long long e = j[0].get<long long>();
    if (e < 0 || e >= m) fail("edge index " + std::to_string(e) + " out of range");
    bool right;
    if (j[1].is_string() && (j[1] == "R" || j[1] == "L")) right = j[1] == "R";
    else if (j[1].is_number_integer() && (j[1] == 0 || j[1] == 1)) right = j[1] == 1;
    else fail("edge end side must be \"L\" or \"R\"");
    return right ? right_end(static_cast<int>(e)) : left_end(static_cast<int>(e));
  };

  std::vector<DivideVertex> vertices;
  for (const auto& v : doc.at("vertices")) {
    if (!v.is_object()) fail("each vertex must be an object");
    DivideVertex dv;
    const nlohmann::json* list = nullptr;
    if (v.contains("cyclic")) {
      list = &v.at("cyclic");
    } else if (v.contains("uturn")) {
      list = &v.at("uturn");
      dv.uturn = true;
    } else {
      fail("vertex needs a 'cyclic' or 'uturn' list");
    }
    if (!list->is_array()) fail("vertex attachment list must be an array");
    for (const auto& end : *list) dv.cyclic.push_back(parse_end(end));
    vertices.push_back(std::move(dv));
  }

  std::map<int, int> cones;
  if (doc.contains("cone")) {
    if (!doc.at("cone").is_object()) fail("'cone' must map face indices to orders");
    for (const auto& [key, value] : doc.at("cone").items()) {
      int index = 0;
      try {
        std::size_t used = 0;
        index = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        fail("cone key '" + key + "' is not a face index");
      }
      if (!value.is_number_integer()) fail("cone order for face " + key + " is not an integer");
      cones[index] = value.get<int>();
    }
  }
  return Divide(static_cast<int>(m), std::move(vertices), std::move(cones));
}

Divide parse_divide(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::MalformedDocument, e.what());
  }
  return divide_from_json(doc);
}

}  // namespace bacfi
