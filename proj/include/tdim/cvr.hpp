#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "tdim/hierarchy.hpp"
#include "tdim/ledge_set.hpp"

namespace tdim {

enum class CvrVertexType { One, Two, Three, T, Plus, L };
const char* to_string(CvrVertexType t);

// Graph on the crossing vertices of a hierarchical mesh. Consecutive crossing
// vertices of an interior l-edge are joined, passing over T-junctions.
struct CvrGraph {
  std::vector<Point> points;
  std::vector<int> mesh_vertex;  // id in the base mesh
  std::vector<int> vertex_level;
  std::vector<std::pair<int, int>> edges;
  LEdgeSet ledges;               // one per interior base l-edge, local vertex ids
  std::vector<int> ledge_level;  // parallel to ledges
  std::vector<char> boundary;    // vertex touches the unbounded side of the graph
  std::vector<CvrVertexType> types;
  bool connected = false;
  bool n_ge_2 = false;           // base mesh satisfies the crossing-count condition
  int turning_degrees = 0;       // total boundary turning, 90 per convex and -90 per reflex corner

  int count(CvrVertexType t) const;
  // Level-i l-edges with their level-i vertices, or with all their vertices.
  LEdgeSet level_ledges(int level, bool closure = false) const;
};

CvrGraph build_cvr(const HMesh& mesh);

struct BoundaryCheck {
  int two = 0, three = 0;
  int turning_degrees = 0;
  bool holds = false;  // V2 = V3 + 4 and the turning total is 360
};

// Throws Disconnected.
BoundaryCheck check_boundary_identity(const CvrGraph& g);

// V+ - VL + delta4. Throws NConditionViolated.
int cvr_dim_formula(const CvrGraph& g, int delta4);

struct CvrEquivalence {
  int dim_mesh = 0;   // homogeneous cubic space of the mesh
  int dim_graph = 0;  // homogeneous linear space of the graph
  bool equal = false;
};

// Throws NConditionViolated.
CvrEquivalence check_cvr_equivalence(const HMesh& mesh);

nlohmann::json cvr_to_json(const CvrGraph& g);

}  // namespace tdim
