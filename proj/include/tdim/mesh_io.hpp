#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include <json.hpp>

#include "tdim/hierarchy.hpp"
#include "tdim/mesh.hpp"

namespace tdim {

// Mesh JSON: {"domain":[x0,y0,x1,y1],"cells":[[x0,y0,x1,y1],...]}; rationals as
// integers or "p/q" strings. A "segments" list may replace "cells".
// Hierarchical JSON: {"x":[...],"y":[...],"division":"2x2","levels":[[ids],...]}.
nlohmann::json mesh_to_json(const TMesh& mesh);
TMesh mesh_from_json(const nlohmann::json& j);
nlohmann::json hmesh_to_json(const HMesh& mesh);
HMesh hmesh_from_json(const nlohmann::json& j);

using AnyMesh = std::variant<TMesh, HMesh>;
AnyMesh any_mesh_from_json(const nlohmann::json& j);
AnyMesh load_mesh(const std::string& path);
nlohmann::json load_json(const std::string& path);

nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

}  // namespace tdim
