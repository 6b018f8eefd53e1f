#include "tdim/formulas.hpp"

#include <algorithm>
#include <set>

#include "tdim/conformality.hpp"
#include "tdim/error.hpp"
#include "tdim/oracle.hpp"

namespace tdim {

Rational default_extension_step(const TMesh& mesh, int m, int n) {
  return mesh.min_cell_side() / (std::max(m, n) + 1);
}

namespace {

std::vector<Rational> coords_on(const TMesh& mesh, bool horizontal_side, const Rational& line) {
  std::set<Rational> out;
  for (const Point& p : mesh.vertices())
    if (horizontal_side ? p.y == line : p.x == line) out.insert(horizontal_side ? p.x : p.y);
  return {out.begin(), out.end()};
}

void add_grid(std::vector<Rect>& cells, const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  for (std::size_t j = 0; j + 1 < ys.size(); ++j)
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) cells.push_back({xs[i], ys[j], xs[i + 1], ys[j + 1]});
}

}  // namespace

ExtendedMesh extend_mesh(const TMesh& mesh, int m, int n, std::optional<Rational> step) {
  if (m < 0 || n < 0) throw Error(Errc::InvalidArgument, "negative copy count");
  Rational h = step ? *step : default_extension_step(mesh, m, n);
  if (sgn(h) <= 0) throw Error(Errc::InvalidArgument, "extension step must be positive");
  const Rect& d = mesh.domain();
  // Frame lines outside each side, ordered increasingly.
  std::vector<Rational> left, right, below, above;
  for (int i = m; i >= 1; --i) left.push_back(d.x0 - h * i);
  for (int i = 1; i <= m; ++i) right.push_back(d.x1 + h * i);
  for (int j = n; j >= 1; --j) below.push_back(d.y0 - h * j);
  for (int j = 1; j <= n; ++j) above.push_back(d.y1 + h * j);
  auto with = [](std::vector<Rational> a, const Rational& b) {
    a.push_back(b);
    return a;
  };
  auto pre = [](const Rational& a, std::vector<Rational> b) {
    b.insert(b.begin(), a);
    return b;
  };

  std::vector<Rect> cells = mesh.cells();
  std::vector<Rational> lx = with(left, d.x0), rx = pre(d.x1, right);
  std::vector<Rational> by = with(below, d.y0), ay = pre(d.y1, above);
  add_grid(cells, coords_on(mesh, true, d.y0), by);
  add_grid(cells, coords_on(mesh, true, d.y1), ay);
  add_grid(cells, lx, coords_on(mesh, false, d.x0));
  add_grid(cells, rx, coords_on(mesh, false, d.x1));
  add_grid(cells, lx, by);
  add_grid(cells, rx, by);
  add_grid(cells, lx, ay);
  add_grid(cells, rx, ay);
  Rect domain{d.x0 - h * m, d.y0 - h * n, d.x1 + h * m, d.y1 + h * n};
  return {TMesh::from_cells(domain, std::move(cells)), m, n, h};
}

LevelStructure extend_levels(const LevelStructure& levels, int m, int n, std::optional<Rational> step) {
  Rational h = step ? *step : default_extension_step(levels.mesh(), m, n);
  std::vector<TMesh> stages;
  for (const TMesh& s : levels.stages()) stages.push_back(extend_mesh(s, m, n, h).result);
  return LevelStructure(std::move(stages));
}

int dim_via_extension(const TMesh& mesh, int m, int n, std::optional<Rational> step) {
  TMesh ext = extend_mesh(mesh, m, n, step).result;
  if (m == n) return dim_W_hbc(ext, m);
  return dim_oracle_hbc(ext, m, n, m - 1, n - 1);
}

std::vector<ComponentCount> classify_components(const LevelStructure& levels, Division division, int degree) {
  std::vector<ComponentCount> out;
  for (int i = 1; i <= levels.lev(); ++i)
    for (const Component& c : levels.components(i))
      out.push_back({i, classify_component(c, division, degree), c.ledges.size(), c.parent_cells.size()});
  return out;
}

DeltaTerms delta_terms(const LevelStructure& levels, Division division, int degree) {
  DeltaTerms t;
  for (const auto& c : classify_components(levels, division, degree)) ++t.classes[c.cls];
  return t;
}

namespace {

struct Counts {
  int crossings, boundary, interior_ledges;
};

Counts counts(const TMesh& mesh) {
  Census c = mesh.census();
  return {c.crossings, c.boundary_vertices, c.interior_ledges()};
}

void require_division(const HMesh& mesh, Division d) {
  if (!(mesh.division() == d)) throw Error(Errc::UnsupportedDivision, "formula needs " + to_string(d) + " division");
}

void require_lines(const HMesh& mesh, std::size_t lines) {
  if (mesh.xs().size() < lines || mesh.ys().size() < lines)
    throw Error(Errc::PreconditionTooCoarse,
                "level-0 mesh needs at least " + std::to_string(lines) + " lines per direction");
}

void require_n2(const HMesh& mesh) {
  if (!check_N_ge_2(mesh)) throw Error(Errc::NConditionViolated, "an l-edge crosses a single parent cell");
}

int weighted_3x3(const DeltaTerms& t) {
  return 4 * t.count(ComponentClass::Case3) + 2 * t.count(ComponentClass::Case2a) +
         t.count(ComponentClass::Case2b) + t.count(ComponentClass::Case2c);
}

DeltaTerms extended_terms(const HMesh& mesh, int degree) {
  return delta_terms(extend_levels(mesh.structure(), degree, degree), mesh.division(), degree);
}

}  // namespace

int dim_s2_hbc(const HMesh& mesh) {
  require_division(mesh, {2, 2});
  require_lines(mesh, 3);
  Counts c = counts(mesh.mesh());
  return c.crossings - c.interior_ledges + delta_terms(mesh.structure(), mesh.division(), 2).count(ComponentClass::SingleCell) + 1;
}

int dim_s2(const HMesh& mesh) {
  require_division(mesh, {2, 2});
  Counts c = counts(mesh.mesh());
  return 2 * c.boundary + c.crossings - c.interior_ledges + extended_terms(mesh, 2).count(ComponentClass::SingleCell) + 1;
}

int dim_s3_hbc(const HMesh& mesh) {
  require_division(mesh, {2, 2});
  require_lines(mesh, 4);
  require_n2(mesh);
  Counts c = counts(mesh.mesh());
  return c.crossings - 2 * c.interior_ledges + 4 +
         delta_terms(mesh.structure(), mesh.division(), 3).count(ComponentClass::TwoByTwoNeighbor);
}

int dim_s3(const HMesh& mesh) {
  require_division(mesh, {2, 2});
  require_n2(mesh);
  Counts c = counts(mesh.mesh());
  return 3 * c.boundary + c.crossings - 2 * c.interior_ledges + 4 +
         extended_terms(mesh, 3).count(ComponentClass::TwoByTwoNeighbor);
}

int dim_s3_3x3_hbc(const HMesh& mesh) {
  require_division(mesh, {3, 3});
  require_lines(mesh, 4);
  Counts c = counts(mesh.mesh());
  return c.crossings - 2 * c.interior_ledges + 4 + weighted_3x3(delta_terms(mesh.structure(), mesh.division(), 3));
}

int dim_s3_3x3(const HMesh& mesh) {
  require_division(mesh, {3, 3});
  Counts c = counts(mesh.mesh());
  return 3 * c.boundary + c.crossings - 2 * c.interior_ledges + 4 + weighted_3x3(extended_terms(mesh, 3));
}

int dim_formula(const HMesh& mesh, int degree, bool hbc) {
  const bool three = mesh.division() == Division{3, 3};
  if (degree == 2 && !three) return hbc ? dim_s2_hbc(mesh) : dim_s2(mesh);
  if (degree == 3 && !three) return hbc ? dim_s3_hbc(mesh) : dim_s3(mesh);
  if (degree == 3 && three) return hbc ? dim_s3_3x3_hbc(mesh) : dim_s3_3x3(mesh);
  throw Error(Errc::RegimeNotCovered,
              "no closed form for degree " + std::to_string(degree) + " with " + to_string(mesh.division()) + " division");
}

std::vector<LevelDim> dim_level_decomposition(const HMesh& mesh, int degree) {
  const bool three = mesh.division() == Division{3, 3};
  if (!(degree == 2 && !three) && !(degree == 3))
    throw Error(Errc::RegimeNotCovered, "no level formula for this degree and division");
  if (degree == 3 && !three && !check_N_ge_2(mesh))
    throw Error(Errc::RegimeNotCovered, "levels are not additive when an l-edge crosses a single parent cell");
  const LevelStructure& s = mesh.structure();
  std::vector<LevelDim> out;
  {
    LevelDim l0;
    l0.level = 0;
    l0.dim_w = dim_W_hbc(s.stage(0), degree);
    const int a = static_cast<int>(mesh.xs().size()) - degree - 1, b = static_cast<int>(mesh.ys().size()) - degree - 1;
    l0.predicted = std::max(a, 0) * std::max(b, 0);
    out.push_back(l0);
  }
  const int scale = degree == 2 ? 1 : 2;
  for (int i = 1; i <= s.lev(); ++i) {
    LevelSet set = s.level_set(i);
    LevelDim d;
    d.level = i;
    d.dim_w = dim_W(s.level_ledges(i), degree);
    for (int v : set.vertices)
      if (s.mesh().vertex_class(v) == VertexClass::Crossing) ++d.crossings;
    d.ledges = static_cast<int>(set.ledges.size());
    int delta = 0;
    for (const Component& c : s.components(i)) {
      ComponentClass k = classify_component(c, mesh.division(), degree);
      if (k == ComponentClass::SingleCell || k == ComponentClass::TwoByTwoNeighbor || k == ComponentClass::Case2b ||
          k == ComponentClass::Case2c)
        delta += 1;
      else if (k == ComponentClass::Case2a)
        delta += 2;
      else if (k == ComponentClass::Case3)
        delta += 4;
    }
    d.predicted = d.crossings - scale * d.ledges + delta;
    out.push_back(d);
  }
  return out;
}

}  // namespace tdim
