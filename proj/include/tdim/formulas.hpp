#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tdim/hierarchy.hpp"
#include "tdim/mesh.hpp"

namespace tdim {

struct ExtendedMesh {
  TMesh result;
  int copies_x = 0;  // copies of each vertical boundary l-edge
  int copies_y = 0;  // copies of each horizontal boundary l-edge
  Rational step;
};

Rational default_extension_step(const TMesh& mesh, int m, int n);

// Surrounds the domain with a frame: vertical boundary l-edges are copied m times,
// horizontal ones n times, at spacing `step`; boundary-touching l-edges run to the new boundary.
ExtendedMesh extend_mesh(const TMesh& mesh, int m, int n, std::optional<Rational> step = {});
// Extends every stage with the same step.
LevelStructure extend_levels(const LevelStructure& levels, int m, int n, std::optional<Rational> step = {});

// dim S(m,n,m-1,n-1) of the mesh via the homogeneous space on the extended mesh.
int dim_via_extension(const TMesh& mesh, int m, int n, std::optional<Rational> step = {});

struct ComponentCount {
  int level = 0;
  ComponentClass cls = ComponentClass::GenericReasonableOrder;
  std::size_t ledges = 0;
  std::size_t parents = 0;
};

std::vector<ComponentCount> classify_components(const LevelStructure& levels, Division division, int degree);

struct DeltaTerms {
  std::map<ComponentClass, int> classes;  // histogram over all levels >= 1
  int count(ComponentClass c) const {
    auto it = classes.find(c);
    return it == classes.end() ? 0 : it->second;
  }
};

DeltaTerms delta_terms(const LevelStructure& levels, Division division, int degree);

// Closed forms. HBC variants count special components on the mesh itself; the
// others count them on the extended mesh.
int dim_s2_hbc(const HMesh& mesh);
int dim_s2(const HMesh& mesh);
int dim_s3_hbc(const HMesh& mesh);
int dim_s3(const HMesh& mesh);
int dim_s3_3x3_hbc(const HMesh& mesh);
int dim_s3_3x3(const HMesh& mesh);

// Closed form for the mesh's division and the given degree.
int dim_formula(const HMesh& mesh, int degree, bool hbc);

struct LevelDim {
  int level = 0;
  int dim_w = 0;      // dim W[T_i] from the conformality system
  int predicted = 0;  // per-level closed form
  int crossings = 0;  // level-i crossing vertices
  int ledges = 0;     // level-i interior l-edges
};

// dim S-bar = dim S-bar(T^0) + sum_i dim W[T_i], level by level.
std::vector<LevelDim> dim_level_decomposition(const HMesh& mesh, int degree);

}  // namespace tdim
