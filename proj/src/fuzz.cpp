#include "tdim/fuzz.hpp"

#include <algorithm>
#include <set>

namespace tdim {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::uniform(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

namespace {

using Shape = std::vector<std::pair<int, int>>;

// Polyomino templates on the lattice of same-level cells.
const std::vector<Shape>& general_shapes() {
  static const std::vector<Shape> shapes = {
      {{0, 0}},                                      // single
      {{0, 0}, {1, 0}},                              // domino
      {{0, 0}, {0, 1}},
      {{0, 0}, {1, 0}, {1, 1}},                      // L-trominoes
      {{0, 0}, {1, 0}, {0, 1}},
      {{0, 0}, {0, 1}, {1, 1}},
      {{1, 0}, {0, 1}, {1, 1}},
      {{0, 0}, {1, 0}, {0, 1}, {1, 1}},              // square
      {{0, 0}, {1, 0}, {1, 1}, {2, 1}},              // S and Z
      {{1, 0}, {2, 0}, {0, 1}, {1, 1}},
      {{0, 0}, {0, 1}, {1, 1}, {1, 2}},
      {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}},      // staircase
      {{0, 0}, {1, 0}, {2, 0}},                      // bar
      {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}},
  };
  return shapes;
}

// Every cell has a horizontal and a vertical partner, so new lines cross two parents.
const std::vector<Shape>& paired_shapes() {
  static const std::vector<Shape> shapes = {
      {{0, 0}, {1, 0}, {0, 1}, {1, 1}},
      {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}},
      {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}},
      {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 2}},
      {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}},
  };
  return shapes;
}

std::vector<Rational> random_lines(Rng& rng, int cells) {
  static const Rational steps[] = {Rational(1), Rational(2), Rational(1, 2), Rational(3, 2), Rational(2, 3)};
  std::vector<Rational> out{Rational(0)};
  bool uniform = rng.chance(50);
  for (int i = 0; i < cells; ++i) out.push_back(out.back() + (uniform ? Rational(1) : steps[rng.uniform(5)]));
  return out;
}

struct Lattice {
  const std::vector<Rect>& cells;
  std::map<std::pair<Rational, Rational>, int> by_corner;

  explicit Lattice(const std::vector<Rect>& c) : cells(c) {
    for (std::size_t i = 0; i < c.size(); ++i) by_corner[{c[i].x0, c[i].y0}] = static_cast<int>(i);
  }
  int right(int i) const { return at(cells[i].x1, cells[i].y0, i, true); }
  int up(int i) const { return at(cells[i].x0, cells[i].y1, i, false); }
  int left(int i) const {
    for (const auto& [key, j] : by_corner)
      if (cells[j].x1 == cells[i].x0 && cells[j].y0 == cells[i].y0 && cells[j].y1 == cells[i].y1) return j;
    return -1;
  }
  int down(int i) const {
    for (const auto& [key, j] : by_corner)
      if (cells[j].y1 == cells[i].y0 && cells[j].x0 == cells[i].x0 && cells[j].x1 == cells[i].x1) return j;
    return -1;
  }
  int at(const Rational& x, const Rational& y, int from, bool horizontal) const {
    auto it = by_corner.find({x, y});
    if (it == by_corner.end()) return -1;
    const Rect& a = cells[from];
    const Rect& b = cells[it->second];
    bool aligned = horizontal ? (a.y1 == b.y1) : (a.x1 == b.x1);
    return aligned ? it->second : -1;
  }
  // Cell at lattice offset (dx, dy) from anchor, walking right then up.
  int offset(int anchor, int dx, int dy) const {
    int c = anchor;
    for (int i = 0; i < dx && c >= 0; ++i) c = right(c);
    for (int j = 0; j < dy && c >= 0; ++j) c = up(c);
    return c;
  }
};

bool touches_boundary(const Rect& c, const Rect& domain) {
  return c.x0 == domain.x0 || c.y0 == domain.y0 || c.x1 == domain.x1 || c.y1 == domain.y1;
}

std::vector<int> choose_cells(Rng& rng, const HMesh& mesh, int level, const FuzzConfig& cfg) {
  const auto& cells = mesh.level_cells(level);
  Lattice lat(cells);
  const Rect domain{mesh.xs().front(), mesh.ys().front(), mesh.xs().back(), mesh.ys().back()};
  const auto& shapes = cfg.require_n2 ? paired_shapes() : general_shapes();
  std::set<int> chosen;
  const int templates = 1 + rng.uniform(3);
  for (int t = 0; t < templates; ++t) {
    const Shape& shape = shapes[rng.uniform(static_cast<int>(shapes.size()))];
    const bool isolate = rng.chance(80);
    const bool interior = rng.chance(80);
    for (int attempt = 0; attempt < 30; ++attempt) {
      int anchor = rng.uniform(static_cast<int>(cells.size()));
      std::vector<int> picked;
      bool ok = true;
      for (const auto& [dx, dy] : shape) {
        int c = lat.offset(anchor, dx, dy);
        if (c < 0 || chosen.count(c) || (interior && touches_boundary(cells[c], domain))) {
          ok = false;
          break;
        }
        picked.push_back(c);
      }
      if (ok && isolate) {
        std::set<int> mine(picked.begin(), picked.end());
        for (int c : picked)
          for (int n : {lat.left(c), lat.right(c), lat.up(c), lat.down(c)})
            if (n >= 0 && !mine.count(n) && chosen.count(n)) ok = false;
      }
      if (!ok) continue;
      chosen.insert(picked.begin(), picked.end());
      break;
    }
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace

HMesh random_hmesh(std::uint64_t seed, const FuzzConfig& cfg) {
  Rng rng(seed);
  const int min_cells = cfg.division == Division{3, 3} ? 4 : 3;
  const int span = std::max(cfg.max_level0 - min_cells + 1, 1);
  const int nx = min_cells + rng.uniform(span), ny = min_cells + rng.uniform(span);
  HMesh mesh(random_lines(rng, nx), random_lines(rng, ny), cfg.division);
  const int levels = 1 + rng.uniform(std::max(cfg.max_level, 1));
  for (int k = 0; k < levels; ++k) {
    std::vector<int> ids = choose_cells(rng, mesh, k, cfg);
    if (ids.empty()) break;
    mesh = mesh.refine(k, ids);
  }
  return mesh;
}

FuzzSummary run_fuzz(const FuzzConfig& cfg) {
  FuzzSummary out;
  Rng seeds(cfg.seed);
  for (int i = 0; i < cfg.count; ++i) {
    std::uint64_t s = seeds.next();
    HMesh mesh = random_hmesh(s, cfg);
    DimReport report = compute_report(mesh, cfg.space, cfg.report);
    if (!report.agree) ++out.mismatches;
    for (const auto& c : report.components) ++out.classes[c.cls];
    out.cases.push_back({i, s, std::move(mesh), std::move(report)});
  }
  return out;
}

nlohmann::json fuzz_to_json(const FuzzConfig& cfg, const FuzzSummary& summary) {
  using nlohmann::json;
  json cases = json::array();
  for (const auto& c : summary.cases) {
    json j = report_to_json(c.report);
    j["index"] = c.index;
    j["seed"] = c.seed;
    j["n_ge_2"] = check_N_ge_2(c.mesh);
    j["mesh"] = hmesh_to_json(c.mesh);
    cases.push_back(std::move(j));
  }
  json classes = json::object();
  for (const auto& [k, v] : summary.classes) classes[to_string(k)] = v;
  return {{"seed", cfg.seed},
          {"count", cfg.count},
          {"space", cfg.space.str()},
          {"division", to_string(cfg.division)},
          {"mismatches", summary.mismatches},
          {"component_classes", classes},
          {"cases", cases}};
}

}  // namespace tdim
