#include "tdim/hierarchy.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tdim/error.hpp"

namespace tdim {

Division parse_division(const std::string& text) {
  if (text == "2x2") return {2, 2};
  if (text == "3x3") return {3, 3};
  throw Error(Errc::UnsupportedDivision, "division '" + text + "'");
}

std::string to_string(Division d) { return std::to_string(d.nx) + "x" + std::to_string(d.ny); }

const char* to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::GenericReasonableOrder: return "generic";
    case ComponentClass::SingleCell: return "single-cell";
    case ComponentClass::TwoByTwoNeighbor: return "two-by-two";
    case ComponentClass::Case2a: return "2.a";
    case ComponentClass::Case2b: return "2.b";
    case ComponentClass::Case2c: return "2.c";
    case ComponentClass::Case2d: return "2.d";
    case ComponentClass::Case2e: return "2.e";
    case ComponentClass::Case3: return "3";
  }
  return "?";
}

namespace {

using Extents = std::map<std::pair<int, Rational>, std::vector<std::pair<Rational, Rational>>>;

Extents ledge_extents(const TMesh& m) {
  Extents out;
  for (std::size_t i = 0; i < m.ledges().size(); ++i) {
    const LEdge& l = m.ledges()[i];
    out[{l.axis == Axis::Horizontal ? 0 : 1, l.line}].push_back(m.ledge_extent(static_cast<int>(i)));
  }
  return out;
}

// Cells whose interior meets the open l-edge.
std::vector<Rect> crossed_cells(const TMesh& stage, const TMesh& fine, int ledge) {
  const LEdge& l = fine.ledges()[ledge];
  auto [lo, hi] = fine.ledge_extent(ledge);
  std::vector<Rect> out;
  for (const Rect& c : stage.cells()) {
    bool hit = l.axis == Axis::Horizontal ? (c.y0 < l.line && l.line < c.y1 && c.x0 < hi && lo < c.x1)
                                          : (c.x0 < l.line && l.line < c.x1 && c.y0 < hi && lo < c.y1);
    if (hit) out.push_back(c);
  }
  return out;
}

bool is_two_by_two_block(const std::vector<Rect>& cells) {
  if (cells.size() != 4) return false;
  std::set<std::pair<Rational, Rational>> xi, yi;
  std::set<std::pair<std::pair<Rational, Rational>, std::pair<Rational, Rational>>> combos;
  for (const Rect& c : cells) {
    xi.emplace(c.x0, c.x1);
    yi.emplace(c.y0, c.y1);
    combos.insert({{c.x0, c.x1}, {c.y0, c.y1}});
  }
  if (xi.size() != 2 || yi.size() != 2 || combos.size() != 4) return false;
  return xi.begin()->second == std::next(xi.begin())->first && yi.begin()->second == std::next(yi.begin())->first;
}

}  // namespace

LevelStructure::LevelStructure(std::vector<TMesh> stages) : stages_(std::move(stages)) {
  if (stages_.empty()) throw Error(Errc::InvalidArgument, "no stages");
  const TMesh& fine = stages_.back();
  std::vector<Extents> extents;
  for (const TMesh& s : stages_) extents.push_back(ledge_extents(s));

  ledge_level_.assign(fine.ledges().size(), -1);
  for (std::size_t i = 0; i < fine.ledges().size(); ++i) {
    const LEdge& l = fine.ledges()[i];
    auto params = fine.ledge_params(static_cast<int>(i));
    Rational mid = (params[0] + params[1]) / 2;
    std::pair<int, Rational> key{l.axis == Axis::Horizontal ? 0 : 1, l.line};
    for (int k = 0; k <= lev() && ledge_level_[i] < 0; ++k) {
      auto it = extents[k].find(key);
      if (it == extents[k].end()) continue;
      for (const auto& [lo, hi] : it->second)
        if (lo < mid && mid < hi) ledge_level_[i] = k;
    }
    if (ledge_level_[i] < 0) throw Error(Errc::InvalidArgument, "stages are not nested");
  }
  vertex_level_.assign(fine.vertices().size(), -1);
  for (std::size_t v = 0; v < fine.vertices().size(); ++v)
    for (int k = 0; k <= lev(); ++k)
      if (stages_[k].find_vertex(fine.vertices()[v])) {
        vertex_level_[v] = k;
        break;
      }
}

const TMesh& LevelStructure::stage(int k) const {
  if (k < 0 || k > lev()) throw Error(Errc::LevelOutOfRange, "stage " + std::to_string(k));
  return stages_[k];
}

LevelSet LevelStructure::level_set(int i) const {
  if (i < 0 || i > lev()) throw Error(Errc::LevelOutOfRange, "level " + std::to_string(i));
  LevelSet s;
  s.level = i;
  std::set<int> closure;
  for (std::size_t l = 0; l < ledge_level_.size(); ++l)
    if (ledge_level_[l] == i) {
      s.ledges.push_back(static_cast<int>(l));
      for (int v : mesh().ledges()[l].vertices) closure.insert(v);
    }
  for (std::size_t v = 0; v < vertex_level_.size(); ++v)
    if (vertex_level_[v] == i) s.vertices.push_back(static_cast<int>(v));
  s.closure_vertices.assign(closure.begin(), closure.end());
  return s;
}

LEdgeSet LevelStructure::level_ledges(int i, bool closure) const {
  LevelSet s = level_set(i);
  if (closure) return LEdgeSet::from_mesh(mesh(), s.ledges);
  return LEdgeSet::from_mesh(mesh(), s.ledges, [&](int v) { return vertex_level_[v] == i; });
}

int LevelStructure::crossing_count(int ledge) const {
  int k = ledge_level_.at(ledge);
  if (k == 0) throw Error(Errc::WrongLevel, "level-0 l-edge has no parent cells");
  return static_cast<int>(crossed_cells(stages_[k - 1], mesh(), ledge).size());
}

std::vector<Component> LevelStructure::components(int i) const {
  if (i < 1 || i > lev()) throw Error(Errc::LevelOutOfRange, "components of level " + std::to_string(i));
  LEdgeSet set = level_ledges(i, true);
  std::vector<Component> out;
  for (const auto& group : set.components()) {
    Component c;
    c.level = i;
    std::vector<Rect> parents;
    for (int idx : group) {
      int id = set[idx].source;
      auto crossed = crossed_cells(stages_[i - 1], mesh(), id);
      c.ledges.push_back(id);
      c.crossing_counts.push_back(static_cast<int>(crossed.size()));
      parents.insert(parents.end(), crossed.begin(), crossed.end());
    }
    std::sort(parents.begin(), parents.end(), rect_less);
    parents.erase(std::unique(parents.begin(), parents.end()), parents.end());
    c.parent_cells = std::move(parents);
    out.push_back(std::move(c));
  }
  return out;
}

ComponentClass classify_component(const Component& c, Division division, int degree) {
  const std::size_t parents = c.parent_cells.size();
  if (division == Division{2, 2}) {
    if (degree == 2) return parents == 1 ? ComponentClass::SingleCell : ComponentClass::GenericReasonableOrder;
    if (degree == 3) {
      bool all_two = std::all_of(c.crossing_counts.begin(), c.crossing_counts.end(), [](int n) { return n == 2; });
      return all_two && c.ledges.size() == 4 && is_two_by_two_block(c.parent_cells)
                 ? ComponentClass::TwoByTwoNeighbor
                 : ComponentClass::GenericReasonableOrder;
    }
  }
  if (division == Division{3, 3} && degree == 3) {
    int s = 0, m = 0;
    for (int n : c.crossing_counts) {
      if (n == 2) ++s;
      if (n >= 3) ++m;
    }
    if (m > 0) return ComponentClass::GenericReasonableOrder;
    if (s == 0) return ComponentClass::Case3;
    if (parents == 2) return ComponentClass::Case2a;
    if (parents == 3) return ComponentClass::Case2b;
    if (parents == 4) return is_two_by_two_block(c.parent_cells) ? ComponentClass::Case2c : ComponentClass::Case2d;
    return ComponentClass::Case2e;
  }
  throw Error(Errc::UnsupportedDivision,
              "no component classes for " + to_string(division) + " and degree " + std::to_string(degree));
}

HMesh::HMesh(std::vector<Rational> xs, std::vector<Rational> ys, Division division)
    : xs_(std::move(xs)), ys_(std::move(ys)), division_(division) {
  if (!(division_ == Division{2, 2}) && !(division_ == Division{3, 3}))
    throw Error(Errc::UnsupportedDivision, to_string(division_));
  TMesh base = TMesh::from_grid(xs_, ys_);
  levels_.push_back({base.cells(), std::vector<char>(base.cells().size(), 0)});
  rebuild();
}

HMesh HMesh::from_script(std::vector<Rational> xs, std::vector<Rational> ys, Division division,
                         const std::vector<std::vector<int>>& script) {
  HMesh h(std::move(xs), std::move(ys), division);
  for (std::size_t k = 0; k < script.size(); ++k) h = h.refine(static_cast<int>(k), script[k]);
  return h;
}

HMesh HMesh::refine(int level, std::span<const int> cell_ids) const {
  if (level < 0 || level > lev()) throw Error(Errc::LevelOutOfRange, "refine at level " + std::to_string(level));
  if (cell_ids.empty()) return *this;
  HMesh out = *this;
  if (level == lev()) out.levels_.push_back({});
  Level& src = out.levels_[level];
  for (int id : cell_ids) {
    if (id < 0 || id >= static_cast<int>(src.cells.size()))
      throw Error(Errc::NoSuchCell, "level " + std::to_string(level) + " cell " + std::to_string(id));
    if (src.divided[id]) throw Error(Errc::AlreadyDivided, "level " + std::to_string(level) + " cell " + std::to_string(id));
    src.divided[id] = 1;
  }
  std::vector<std::pair<Rect, char>> next;
  Level& dst = out.levels_[level + 1];
  for (std::size_t i = 0; i < dst.cells.size(); ++i) next.emplace_back(dst.cells[i], dst.divided[i]);
  for (int id : cell_ids) {
    const Rect& c = src.cells[id];
    for (int j = 0; j < division_.ny; ++j)
      for (int i = 0; i < division_.nx; ++i) {
        Rect r{c.x0 + c.width() * i / division_.nx, c.y0 + c.height() * j / division_.ny,
               c.x0 + c.width() * (i + 1) / division_.nx, c.y0 + c.height() * (j + 1) / division_.ny};
        next.emplace_back(r, 0);
      }
  }
  std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return rect_less(a.first, b.first); });
  dst.cells.clear();
  dst.divided.clear();
  for (auto& [r, d] : next) {
    dst.cells.push_back(std::move(r));
    dst.divided.push_back(d);
  }
  out.rebuild();
  return out;
}

void HMesh::rebuild() {
  std::vector<TMesh> stages;
  Rect domain{xs_.front(), ys_.front(), xs_.back(), ys_.back()};
  for (int k = 0; k <= lev(); ++k) {
    std::vector<Rect> cells;
    for (int j = 0; j <= k; ++j)
      for (std::size_t i = 0; i < levels_[j].cells.size(); ++i)
        if (j == k || !levels_[j].divided[i]) cells.push_back(levels_[j].cells[i]);
    stages.push_back(TMesh::from_cells(domain, std::move(cells)));
  }
  structure_ = std::make_shared<const LevelStructure>(std::move(stages));
}

const std::vector<Rect>& HMesh::level_cells(int k) const {
  if (k < 0 || k > lev()) throw Error(Errc::LevelOutOfRange, "level " + std::to_string(k));
  return levels_[k].cells;
}

bool HMesh::is_divided(int k, int cell) const {
  const auto& cells = level_cells(k);
  if (cell < 0 || cell >= static_cast<int>(cells.size())) throw Error(Errc::NoSuchCell, std::to_string(cell));
  return levels_[k].divided[cell] != 0;
}

std::vector<std::vector<int>> HMesh::script() const {
  std::vector<std::vector<int>> out;
  for (int k = 0; k < lev(); ++k) {
    std::vector<int> ids;
    for (std::size_t i = 0; i < levels_[k].divided.size(); ++i)
      if (levels_[k].divided[i]) ids.push_back(static_cast<int>(i));
    out.push_back(std::move(ids));
  }
  return out;
}

int HMesh::find_cell(int k, const Rational& x0, const Rational& y0) const {
  const auto& cells = level_cells(k);
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].x0 == x0 && cells[i].y0 == y0) return static_cast<int>(i);
  return -1;
}

LevelSet HMesh::level_set(int i) const { return structure_->level_set(i); }

HMesh HMesh::transformed(const AxisMap& map) const {
  if (sgn(map.sx) <= 0 || sgn(map.sy) <= 0) throw Error(Errc::InvalidArgument, "axis scales must be positive");
  HMesh out = *this;
  for (auto& x : out.xs_) x = map.x(x);
  for (auto& y : out.ys_) y = map.y(y);
  for (auto& level : out.levels_)
    for (auto& c : level.cells) c = map.apply(c);
  out.rebuild();
  return out;
}

bool check_N_ge_2(const HMesh& mesh) {
  const LevelStructure& s = mesh.structure();
  for (std::size_t l = 0; l < s.mesh().ledges().size(); ++l)
    if (s.ledge_level(static_cast<int>(l)) > 0 && s.crossing_count(static_cast<int>(l)) < 2) return false;
  return true;
}

}  // namespace tdim
