#include "tdim/cvr.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tdim/conformality.hpp"
#include "tdim/error.hpp"
#include "tdim/mesh_io.hpp"

namespace tdim {

const char* to_string(CvrVertexType t) {
  switch (t) {
    case CvrVertexType::One: return "1";
    case CvrVertexType::Two: return "2";
    case CvrVertexType::Three: return "3";
    case CvrVertexType::T: return "T";
    case CvrVertexType::Plus: return "+";
    case CvrVertexType::L: return "L";
  }
  return "?";
}

int CvrGraph::count(CvrVertexType t) const { return static_cast<int>(std::count(types.begin(), types.end(), t)); }

LEdgeSet CvrGraph::level_ledges(int level, bool closure) const {
  std::vector<LEdgeRef> out;
  for (std::size_t i = 0; i < ledges.size(); ++i) {
    if (ledge_level[i] != level) continue;
    LEdgeRef r;
    r.axis = ledges[i].axis;
    r.source = ledges[i].source;
    for (std::size_t k = 0; k < ledges[i].vertices.size(); ++k) {
      int v = ledges[i].vertices[k];
      if (!closure && vertex_level[v] != level) continue;
      r.vertices.push_back(v);
      r.params.push_back(ledges[i].params[k]);
    }
    out.push_back(std::move(r));
  }
  return LEdgeSet(std::move(out));
}

namespace {

using Intervals = std::map<Rational, std::vector<std::pair<Rational, Rational>>>;

bool covered(const Intervals& m, const Rational& line, const Rational& a, const Rational& b) {
  auto it = m.find(line);
  if (it == m.end()) return false;
  for (const auto& [lo, hi] : it->second)
    if (lo <= a && b <= hi) return true;
  return false;
}

// Marks vertices touching the outside of the region enclosed by the edges and
// sums the turning at each boundary corner.
void classify_boundary(CvrGraph& g) {
  std::set<Rational> xset, yset;
  for (const Point& p : g.points) {
    xset.insert(p.x);
    yset.insert(p.y);
  }
  std::vector<Rational> xs(xset.begin(), xset.end()), ys(yset.begin(), yset.end());
  Intervals vertical, horizontal;  // edges merge into runs along each line
  for (const auto& [a, b] : g.edges) {
    const Point &p = g.points[a], &q = g.points[b];
    if (p.x == q.x)
      vertical[p.x].emplace_back(std::min(p.y, q.y), std::max(p.y, q.y));
    else
      horizontal[p.y].emplace_back(std::min(p.x, q.x), std::max(p.x, q.x));
  }
  for (Intervals* m : {&vertical, &horizontal})
    for (auto& [line, iv] : *m) {
      std::sort(iv.begin(), iv.end());
      std::vector<std::pair<Rational, Rational>> merged;
      for (auto& p : iv) {
        if (!merged.empty() && p.first <= merged.back().second)
          merged.back().second = std::max(merged.back().second, p.second);
        else
          merged.push_back(p);
      }
      iv = std::move(merged);
    }

  // Cell (i, j) spans (xs[i-1], xs[i]) x (ys[j-1], ys[j]); indices 0 and size() are unbounded.
  const int X = static_cast<int>(xs.size()), Y = static_cast<int>(ys.size());
  auto idx = [Y](int i, int j) { return i * (Y + 1) + j; };
  std::vector<char> outside((X + 1) * (Y + 1), 0);
  std::vector<std::pair<int, int>> stack{{0, 0}};
  outside[idx(0, 0)] = 1;
  auto try_push = [&](int i, int j) {
    if (i < 0 || j < 0 || i > X || j > Y || outside[idx(i, j)]) return;
    outside[idx(i, j)] = 1;
    stack.emplace_back(i, j);
  };
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    bool bounded_y = j >= 1 && j < Y, bounded_x = i >= 1 && i < X;
    // Right neighbour across x = xs[i].
    if (i < X && !(bounded_y && covered(vertical, xs[i], ys[j - 1], ys[j]))) try_push(i + 1, j);
    if (i > 0 && !(bounded_y && covered(vertical, xs[i - 1], ys[j - 1], ys[j]))) try_push(i - 1, j);
    if (j < Y && !(bounded_x && covered(horizontal, ys[j], xs[i - 1], xs[i]))) try_push(i, j + 1);
    if (j > 0 && !(bounded_x && covered(horizontal, ys[j - 1], xs[i - 1], xs[i]))) try_push(i, j - 1);
  }

  g.boundary.assign(g.points.size(), 0);
  g.turning_degrees = 0;
  for (std::size_t v = 0; v < g.points.size(); ++v) {
    int i = static_cast<int>(std::lower_bound(xs.begin(), xs.end(), g.points[v].x) - xs.begin());
    int j = static_cast<int>(std::lower_bound(ys.begin(), ys.end(), g.points[v].y) - ys.begin());
    bool sw = !outside[idx(i, j)], se = !outside[idx(i + 1, j)];
    bool nw = !outside[idx(i, j + 1)], ne = !outside[idx(i + 1, j + 1)];
    int inside = sw + se + nw + ne;
    g.boundary[v] = inside < 4;
    if (inside == 1) g.turning_degrees += 90;
    if (inside == 3) g.turning_degrees -= 90;
    if (inside == 2 && sw == ne) g.turning_degrees -= 180;
  }
}

}  // namespace

CvrGraph build_cvr(const HMesh& hmesh) {
  const TMesh& mesh = hmesh.mesh();
  const LevelStructure& levels = hmesh.structure();
  CvrGraph g;
  std::vector<int> local(mesh.vertices().size(), -1);
  for (std::size_t v = 0; v < mesh.vertices().size(); ++v)
    if (mesh.vertex_class(static_cast<int>(v)) == VertexClass::Crossing) {
      local[v] = static_cast<int>(g.points.size());
      g.points.push_back(mesh.vertices()[v]);
      g.mesh_vertex.push_back(static_cast<int>(v));
      g.vertex_level.push_back(levels.vertex_level(static_cast<int>(v)));
    }

  std::vector<LEdgeRef> refs;
  std::vector<std::array<char, 2>> role(g.points.size(), {0, 0});  // per axis: 1 endpoint, 2 interior
  for (std::size_t l = 0; l < mesh.ledges().size(); ++l) {
    const LEdge& e = mesh.ledges()[l];
    if (!e.interior()) continue;
    LEdgeRef r;
    r.axis = e.axis;
    r.source = static_cast<int>(l);
    for (int v : e.vertices) {
      if (local[v] < 0) continue;
      r.vertices.push_back(local[v]);
      const Point& p = mesh.vertices()[v];
      r.params.push_back(e.axis == Axis::Horizontal ? p.x : p.y);
    }
    if (r.vertices.empty()) continue;
    for (std::size_t k = 0; k + 1 < r.vertices.size(); ++k) g.edges.emplace_back(r.vertices[k], r.vertices[k + 1]);
    const int a = e.axis == Axis::Horizontal ? 0 : 1;
    for (std::size_t k = 0; k < r.vertices.size(); ++k)
      role[r.vertices[k]][a] = (k == 0 || k + 1 == r.vertices.size()) ? 1 : 2;
    g.ledge_level.push_back(levels.ledge_level(static_cast<int>(l)));
    refs.push_back(std::move(r));
  }
  g.ledges = LEdgeSet(std::move(refs));

  std::vector<int> parent(g.points.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : g.edges) parent[find(a)] = find(b);
  std::set<int> roots;
  for (std::size_t v = 0; v < g.points.size(); ++v) roots.insert(find(static_cast<int>(v)));
  g.connected = roots.size() == 1;

  classify_boundary(g);
  g.types.resize(g.points.size());
  for (std::size_t v = 0; v < g.points.size(); ++v) {
    int ends = (role[v][0] == 1) + (role[v][1] == 1);
    if (g.boundary[v])
      g.types[v] = ends == 2 ? CvrVertexType::Two : ends == 1 ? CvrVertexType::One : CvrVertexType::Three;
    else
      g.types[v] = ends == 2 ? CvrVertexType::L : ends == 1 ? CvrVertexType::T : CvrVertexType::Plus;
  }
  g.n_ge_2 = check_N_ge_2(hmesh);
  return g;
}

BoundaryCheck check_boundary_identity(const CvrGraph& g) {
  if (!g.connected) throw Error(Errc::Disconnected, "graph has several components");
  BoundaryCheck c;
  c.two = g.count(CvrVertexType::Two);
  c.three = g.count(CvrVertexType::Three);
  c.turning_degrees = g.turning_degrees;
  c.holds = c.two == c.three + 4 && c.turning_degrees == 360;
  return c;
}

int cvr_dim_formula(const CvrGraph& g, int delta4) {
  if (!g.n_ge_2) throw Error(Errc::NConditionViolated, "an l-edge crosses a single parent cell");
  return g.count(CvrVertexType::Plus) - g.count(CvrVertexType::L) + delta4;
}

CvrEquivalence check_cvr_equivalence(const HMesh& mesh) {
  if (!check_N_ge_2(mesh)) throw Error(Errc::NConditionViolated, "an l-edge crosses a single parent cell");
  CvrGraph g = build_cvr(mesh);
  CvrEquivalence e;
  e.dim_mesh = dim_W_hbc(mesh.mesh(), 3);
  e.dim_graph = dim_W(g.ledges, 1);
  e.equal = e.dim_mesh == e.dim_graph;
  return e;
}

nlohmann::json cvr_to_json(const CvrGraph& g) {
  using nlohmann::json;
  json vertices = json::array(), edges = json::array(), ledges = json::array();
  for (std::size_t v = 0; v < g.points.size(); ++v)
    vertices.push_back({{"x", rational_to_json(g.points[v].x)},
                        {"y", rational_to_json(g.points[v].y)},
                        {"type", to_string(g.types[v])},
                        {"level", g.vertex_level[v]},
                        {"boundary", g.boundary[v] != 0}});
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  for (std::size_t i = 0; i < g.ledges.size(); ++i)
    ledges.push_back({{"axis", g.ledges[i].axis == Axis::Horizontal ? "h" : "v"},
                      {"level", g.ledge_level[i]},
                      {"vertices", g.ledges[i].vertices}});
  json counts = json::object();
  for (auto t : {CvrVertexType::One, CvrVertexType::Two, CvrVertexType::Three, CvrVertexType::T, CvrVertexType::Plus,
                 CvrVertexType::L})
    counts[to_string(t)] = g.count(t);
  return {{"vertices", vertices}, {"edges", edges}, {"ledges", ledges}, {"type_counts", counts},
          {"connected", g.connected}, {"turning_degrees", g.turning_degrees}};
}

}  // namespace tdim
