#include "tdim/mesh_io.hpp"

#include <fstream>

#include "tdim/error.hpp"

namespace tdim {

using nlohmann::json;

json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(Errc::ParseError, "expected an integer or a \"p/q\" string, got " + j.dump());
}

namespace {

Rect rect_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw Error(Errc::ParseError, "rectangle must be [x0,y0,x1,y1]");
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]), rational_from_json(j[3])};
}

json rect_to_json(const Rect& r) {
  return json::array({rational_to_json(r.x0), rational_to_json(r.y0), rational_to_json(r.x1), rational_to_json(r.y1)});
}

std::vector<Rational> rationals(const json& j, const char* what) {
  if (!j.is_array()) throw Error(Errc::ParseError, std::string(what) + " must be a list");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::ParseError, std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

json mesh_to_json(const TMesh& mesh) {
  json cells = json::array();
  for (const Rect& c : mesh.cells()) cells.push_back(rect_to_json(c));
  return {{"domain", rect_to_json(mesh.domain())}, {"cells", cells}};
}

TMesh mesh_from_json(const json& j) {
  Rect domain = rect_from_json(field(j, "domain"));
  if (j.contains("cells")) {
    std::vector<Rect> cells;
    if (!j["cells"].is_array()) throw Error(Errc::ParseError, "cells must be a list");
    for (const auto& c : j["cells"]) cells.push_back(rect_from_json(c));
    return TMesh::from_cells(domain, std::move(cells));
  }
  if (j.contains("segments")) {
    std::vector<Segment> segs;
    for (const auto& s : j["segments"]) {
      Rect r = rect_from_json(s);
      segs.push_back({r.x0, r.y0, r.x1, r.y1});
    }
    return TMesh::from_segments(domain, segs);
  }
  throw Error(Errc::ParseError, "mesh needs 'cells' or 'segments'");
}

json hmesh_to_json(const HMesh& mesh) {
  json xs = json::array(), ys = json::array();
  for (const auto& x : mesh.xs()) xs.push_back(rational_to_json(x));
  for (const auto& y : mesh.ys()) ys.push_back(rational_to_json(y));
  return {{"x", xs}, {"y", ys}, {"division", to_string(mesh.division())}, {"levels", mesh.script()}};
}

HMesh hmesh_from_json(const json& j) {
  auto xs = rationals(field(j, "x"), "x");
  auto ys = rationals(field(j, "y"), "y");
  Division div = j.contains("division") ? parse_division(j["division"].get<std::string>()) : Division{};
  std::vector<std::vector<int>> script;
  if (j.contains("levels")) {
    for (const auto& level : j["levels"]) {
      std::vector<int> ids;
      for (const auto& id : level) {
        if (!id.is_number_integer()) throw Error(Errc::ParseError, "cell index must be an integer");
        ids.push_back(id.get<int>());
      }
      script.push_back(std::move(ids));
    }
  }
  return HMesh::from_script(std::move(xs), std::move(ys), div, script);
}

AnyMesh any_mesh_from_json(const json& j) {
  if (j.is_object() && j.contains("x")) return hmesh_from_json(j);
  return mesh_from_json(j);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

AnyMesh load_mesh(const std::string& path) { return any_mesh_from_json(load_json(path)); }

}  // namespace tdim
