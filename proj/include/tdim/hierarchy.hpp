#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tdim/ledge_set.hpp"
#include "tdim/mesh.hpp"

namespace tdim {

struct Division {
  int nx = 2, ny = 2;
  friend bool operator==(const Division&, const Division&) = default;
};

Division parse_division(const std::string& text);  // "2x2" or "3x3"
std::string to_string(Division d);

enum class ComponentClass {
  GenericReasonableOrder,
  SingleCell,
  TwoByTwoNeighbor,
  Case2a,
  Case2b,
  Case2c,
  Case2d,
  Case2e,
  Case3,
};

const char* to_string(ComponentClass c);

struct Component {
  int level = 0;
  std::vector<int> ledges;           // l-edge ids in the finest mesh
  std::vector<int> crossing_counts;  // parallel to ledges
  std::vector<Rect> parent_cells;    // divided cells of the previous stage, sorted
};

struct LevelSet {
  int level = 0;
  std::vector<int> ledges;            // l-edges first appearing at this level
  std::vector<int> vertices;          // vertices first appearing at this level
  std::vector<int> closure_vertices;  // every vertex lying on those l-edges
};

// Levels of a nested sequence of T-meshes (stage k refines stage k-1).
class LevelStructure {
 public:
  explicit LevelStructure(std::vector<TMesh> stages);

  int lev() const { return static_cast<int>(stages_.size()) - 1; }
  const TMesh& mesh() const { return stages_.back(); }
  const TMesh& stage(int k) const;
  const std::vector<TMesh>& stages() const { return stages_; }

  int ledge_level(int ledge) const { return ledge_level_[ledge]; }
  int vertex_level(int v) const { return vertex_level_[v]; }
  LevelSet level_set(int i) const;
  // l-edges of level i with their level-i vertices (closure=false) or all their vertices.
  LEdgeSet level_ledges(int i, bool closure = false) const;
  // Number of stage-(level-1) cells whose interior the l-edge crosses. Throws WrongLevel on level 0.
  int crossing_count(int ledge) const;
  std::vector<Component> components(int i) const;

 private:
  std::vector<TMesh> stages_;
  std::vector<int> ledge_level_;
  std::vector<int> vertex_level_;
};

ComponentClass classify_component(const Component& c, Division division, int degree);

class HMesh {
 public:
  HMesh(std::vector<Rational> xs, std::vector<Rational> ys, Division division = {});
  // Script: per level, indices of the cells divided at that level.
  static HMesh from_script(std::vector<Rational> xs, std::vector<Rational> ys, Division division,
                           const std::vector<std::vector<int>>& script);

  // Divides undivided level-k cells (indexed by the level's row-major order).
  HMesh refine(int level, std::span<const int> cell_ids) const;

  int lev() const { return static_cast<int>(levels_.size()) - 1; }
  Division division() const { return division_; }
  const std::vector<Rational>& xs() const { return xs_; }
  const std::vector<Rational>& ys() const { return ys_; }
  // Level-k cells sorted by lower-left corner (y, then x).
  const std::vector<Rect>& level_cells(int k) const;
  bool is_divided(int k, int cell) const;
  std::vector<std::vector<int>> script() const;
  // Index of the level-k cell with the given lower-left corner, or -1.
  int find_cell(int k, const Rational& x0, const Rational& y0) const;

  const TMesh& mesh() const { return structure_->mesh(); }
  const TMesh& stage(int k) const { return structure_->stage(k); }
  const LevelStructure& structure() const { return *structure_; }
  LevelSet level_set(int i) const;
  int crossing_count(int ledge) const { return structure_->crossing_count(ledge); }

  HMesh transformed(const AxisMap& map) const;

 private:
  struct Level {
    std::vector<Rect> cells;
    std::vector<char> divided;
  };
  HMesh() = default;
  void rebuild();

  std::vector<Rational> xs_, ys_;
  Division division_;
  std::vector<Level> levels_;
  std::shared_ptr<const LevelStructure> structure_;
};

// True when every l-edge above level 0 crosses at least two parent cells.
bool check_N_ge_2(const HMesh& mesh);

}  // namespace tdim
