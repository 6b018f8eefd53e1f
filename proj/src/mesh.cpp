#include "tdim/mesh.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tdim/error.hpp"

namespace tdim {

const char* to_string(VertexClass c) {
  switch (c) {
    case VertexClass::Boundary: return "boundary";
    case VertexClass::TJunction: return "t-junction";
    case VertexClass::Crossing: return "crossing";
  }
  return "?";
}

const char* to_string(LEdgeType t) {
  switch (t) {
    case LEdgeType::Boundary: return "boundary";
    case LEdgeType::CrossCut: return "cross-cut";
    case LEdgeType::Ray: return "ray";
    case LEdgeType::TLEdge: return "t-ledge";
  }
  return "?";
}

namespace {

std::string describe(const Rect& r) {
  return "[" + to_string(r.x0) + "," + to_string(r.x1) + "]x[" + to_string(r.y0) + "," +
         to_string(r.y1) + "]";
}

void check_domain(const Rect& d) {
  if (!(d.x0 < d.x1) || !(d.y0 < d.y1)) throw Error(Errc::DegenerateCell, "empty domain " + describe(d));
}

}  // namespace

TMesh TMesh::from_cells(const Rect& domain, std::vector<Rect> cells) {
  check_domain(domain);
  if (cells.empty()) throw Error(Errc::NotRegular, "no cells");
  Rational area = 0;
  for (const Rect& c : cells) {
    if (!(c.x0 < c.x1) || !(c.y0 < c.y1)) throw Error(Errc::DegenerateCell, describe(c));
    if (c.x0 < domain.x0 || c.x1 > domain.x1 || c.y0 < domain.y0 || c.y1 > domain.y1)
      throw Error(Errc::NotRegular, "cell " + describe(c) + " leaves the domain");
    area += c.width() * c.height();
  }
  std::sort(cells.begin(), cells.end(), [](const Rect& a, const Rect& b) {
    if (int c = cmp(a.x0, b.x0)) return c < 0;
    return rect_less(a, b);
  });
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size() && cells[j].x0 < cells[i].x1; ++j)
      if (interiors_overlap(cells[i], cells[j]))
        throw Error(Errc::Overlap, describe(cells[i]) + " and " + describe(cells[j]));
  if (area != domain.width() * domain.height()) throw Error(Errc::NotRegular, "cells do not cover the domain");

  std::sort(cells.begin(), cells.end(), rect_less);
  TMesh mesh;
  mesh.domain_ = domain;
  mesh.cells_ = std::move(cells);
  mesh.build_topology();
  return mesh;
}

TMesh TMesh::from_grid(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() < 2 || ys.size() < 2) throw Error(Errc::InvalidArgument, "grid needs two lines per axis");
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i - 1] < xs[i])) throw Error(Errc::InvalidArgument, "grid x lines must increase");
  for (std::size_t i = 1; i < ys.size(); ++i)
    if (!(ys[i - 1] < ys[i])) throw Error(Errc::InvalidArgument, "grid y lines must increase");
  std::vector<Rect> cells;
  for (std::size_t j = 0; j + 1 < ys.size(); ++j)
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) cells.push_back({xs[i], ys[j], xs[i + 1], ys[j + 1]});
  return from_cells({xs.front(), ys.front(), xs.back(), ys.back()}, std::move(cells));
}

namespace {

// Merged closed intervals per line coordinate.
using IntervalMap = std::map<Rational, std::vector<std::pair<Rational, Rational>>>;

void merge_intervals(IntervalMap& m) {
  for (auto& [line, iv] : m) {
    std::sort(iv.begin(), iv.end());
    std::vector<std::pair<Rational, Rational>> out;
    for (auto& p : iv) {
      if (!out.empty() && p.first <= out.back().second)
        out.back().second = std::max(out.back().second, p.second);
      else
        out.push_back(p);
    }
    iv = std::move(out);
  }
}

bool covers(const IntervalMap& m, const Rational& line, const Rational& a, const Rational& b) {
  auto it = m.find(line);
  if (it == m.end()) return false;
  for (const auto& [lo, hi] : it->second)
    if (lo <= a && b <= hi) return true;
  return false;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

TMesh TMesh::from_segments(const Rect& domain, std::span<const Segment> segments) {
  check_domain(domain);
  std::set<Rational> xset{domain.x0, domain.x1}, yset{domain.y0, domain.y1};
  IntervalMap vertical, horizontal;
  for (const Segment& s : segments) {
    bool is_h = s.y0 == s.y1, is_v = s.x0 == s.x1;
    if (is_h == is_v) throw Error(Errc::InvalidArgument, "segments must be axis-aligned and non-degenerate");
    for (const Rational* v : {&s.x0, &s.x1})
      if (*v < domain.x0 || *v > domain.x1) throw Error(Errc::NotRegular, "segment leaves the domain");
    for (const Rational* v : {&s.y0, &s.y1})
      if (*v < domain.y0 || *v > domain.y1) throw Error(Errc::NotRegular, "segment leaves the domain");
    xset.insert(s.x0);
    xset.insert(s.x1);
    yset.insert(s.y0);
    yset.insert(s.y1);
    if (is_h)
      horizontal[s.y0].emplace_back(std::min(s.x0, s.x1), std::max(s.x0, s.x1));
    else
      vertical[s.x0].emplace_back(std::min(s.y0, s.y1), std::max(s.y0, s.y1));
  }
  merge_intervals(vertical);
  merge_intervals(horizontal);
  std::vector<Rational> xs(xset.begin(), xset.end()), ys(yset.begin(), yset.end());
  const int nx = static_cast<int>(xs.size()) - 1, ny = static_cast<int>(ys.size()) - 1;
  auto id = [nx](int i, int j) { return j * nx + i; };

  UnionFind uf(static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (i + 1 < nx && !covers(vertical, xs[i + 1], ys[j], ys[j + 1])) uf.unite(id(i, j), id(i + 1, j));
      if (j + 1 < ny && !covers(horizontal, ys[j + 1], xs[i], xs[i + 1])) uf.unite(id(i, j), id(i, j + 1));
    }

  // A segment piece separating two fine cells of the same face does not bound anything.
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (i + 1 < nx && covers(vertical, xs[i + 1], ys[j], ys[j + 1]) && uf.find(id(i, j)) == uf.find(id(i + 1, j)))
        throw Error(Errc::Dangling, "segment on x=" + to_string(xs[i + 1]) + " ends inside a cell");
      if (j + 1 < ny && covers(horizontal, ys[j + 1], xs[i], xs[i + 1]) && uf.find(id(i, j)) == uf.find(id(i, j + 1)))
        throw Error(Errc::Dangling, "segment on y=" + to_string(ys[j + 1]) + " ends inside a cell");
    }

  std::map<int, std::array<int, 5>> faces;  // root -> imin, jmin, imax, jmax, count
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      int r = uf.find(id(i, j));
      auto [it, fresh] = faces.try_emplace(r, std::array<int, 5>{i, j, i, j, 0});
      auto& f = it->second;
      f[0] = std::min(f[0], i);
      f[1] = std::min(f[1], j);
      f[2] = std::max(f[2], i);
      f[3] = std::max(f[3], j);
      ++f[4];
    }
  std::vector<Rect> cells;
  for (const auto& [root, f] : faces) {
    if ((f[2] - f[0] + 1) * (f[3] - f[1] + 1) != f[4])
      throw Error(Errc::NotRegular, "non-rectangular face near (" + to_string(xs[f[0]]) + "," + to_string(ys[f[1]]) + ")");
    cells.push_back({xs[f[0]], ys[f[1]], xs[f[2] + 1], ys[f[3] + 1]});
  }
  return from_cells(domain, std::move(cells));
}

void TMesh::build_topology() {
  std::set<Point> corners;
  for (const Rect& c : cells_) {
    corners.insert({c.x0, c.y0});
    corners.insert({c.x1, c.y0});
    corners.insert({c.x0, c.y1});
    corners.insert({c.x1, c.y1});
  }
  vertices_.assign(corners.begin(), corners.end());
  for (std::size_t i = 0; i < vertices_.size(); ++i) vertex_index_.emplace(vertices_[i], static_cast<int>(i));

  std::map<Rational, std::vector<int>> rows, cols;  // sorted along the line since vertices_ is (y,x)-sorted
  for (std::size_t i = 0; i < vertices_.size(); ++i) rows[vertices_[i].y].push_back(static_cast<int>(i));
  for (std::size_t i = 0; i < vertices_.size(); ++i) cols[vertices_[i].x].push_back(static_cast<int>(i));
  for (auto& [x, ids] : cols)
    std::sort(ids.begin(), ids.end(), [&](int a, int b) { return vertices_[a].y < vertices_[b].y; });

  std::set<std::pair<int, int>> seen;
  auto add_side = [&](const std::vector<int>& line, bool horizontal, const Rational& lo, const Rational& hi) {
    auto coord = [&](int v) -> const Rational& { return horizontal ? vertices_[v].x : vertices_[v].y; };
    auto it = std::lower_bound(line.begin(), line.end(), lo, [&](int v, const Rational& c) { return coord(v) < c; });
    for (; it != line.end() && it + 1 != line.end() && coord(*it) < hi; ++it) {
      int a = *it, b = *(it + 1);
      if (seen.emplace(a, b).second) edges_.push_back({a, b, horizontal ? Axis::Horizontal : Axis::Vertical});
    }
  };
  for (const Rect& c : cells_) {
    add_side(rows[c.y0], true, c.x0, c.x1);
    add_side(rows[c.y1], true, c.x0, c.x1);
    add_side(cols[c.x0], false, c.y0, c.y1);
    add_side(cols[c.x1], false, c.y0, c.y1);
  }

  valence_.assign(vertices_.size(), 0);
  for (const Edge& e : edges_) {
    ++valence_[e.v0];
    ++valence_[e.v1];
  }
  classes_.resize(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (on_boundary(vertices_[v]))
      classes_[v] = VertexClass::Boundary;
    else if (valence_[v] == 4)
      classes_[v] = VertexClass::Crossing;
    else if (valence_[v] == 3)
      classes_[v] = VertexClass::TJunction;
    else
      throw Error(Errc::NotRegular, "interior vertex of valence " + std::to_string(valence_[v]));
  }

  // Chain collinear edges into maximal segments.
  std::map<std::pair<int, Rational>, std::vector<const Edge*>> groups;
  for (const Edge& e : edges_) {
    bool h = e.axis == Axis::Horizontal;
    groups[{h ? 0 : 1, h ? vertices_[e.v0].y : vertices_[e.v0].x}].push_back(&e);
  }
  through_.assign(vertices_.size(), {-1, -1});
  for (auto& [key, group] : groups) {
    bool h = key.first == 0;
    auto start = [&](const Edge* e) -> const Rational& { return h ? vertices_[e->v0].x : vertices_[e->v0].y; };
    std::sort(group.begin(), group.end(), [&](const Edge* a, const Edge* b) { return start(a) < start(b); });
    for (std::size_t i = 0; i < group.size();) {
      LEdge l;
      l.axis = h ? Axis::Horizontal : Axis::Vertical;
      l.line = key.second;
      l.vertices = {group[i]->v0, group[i]->v1};
      std::size_t j = i + 1;
      for (; j < group.size() && group[j]->v0 == l.vertices.back(); ++j) l.vertices.push_back(group[j]->v1);
      i = j;
      bool on_side = h ? (l.line == domain_.y0 || l.line == domain_.y1) : (l.line == domain_.x0 || l.line == domain_.x1);
      int ends = (classes_[l.vertices.front()] == VertexClass::Boundary) + (classes_[l.vertices.back()] == VertexClass::Boundary);
      l.type = on_side ? LEdgeType::Boundary : ends == 2 ? LEdgeType::CrossCut : ends == 1 ? LEdgeType::Ray : LEdgeType::TLEdge;
      int idx = static_cast<int>(ledges_.size());
      for (int v : l.vertices) through_[v][h ? 0 : 1] = idx;
      ledges_.push_back(std::move(l));
    }
  }
}

bool TMesh::on_boundary(const Point& p) const {
  return p.x == domain_.x0 || p.x == domain_.x1 || p.y == domain_.y0 || p.y == domain_.y1;
}

std::optional<int> TMesh::find_vertex(const Point& p) const {
  auto it = vertex_index_.find(p);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Rational> TMesh::ledge_params(int ledge) const {
  const LEdge& l = ledges_[ledge];
  std::vector<Rational> out;
  out.reserve(l.vertices.size());
  for (int v : l.vertices) out.push_back(l.axis == Axis::Horizontal ? vertices_[v].x : vertices_[v].y);
  return out;
}

std::pair<Rational, Rational> TMesh::ledge_extent(int ledge) const {
  const LEdge& l = ledges_[ledge];
  const Point& a = vertices_[l.vertices.front()];
  const Point& b = vertices_[l.vertices.back()];
  return l.axis == Axis::Horizontal ? std::pair{a.x, b.x} : std::pair{a.y, b.y};
}

Census TMesh::census() const {
  Census c;
  c.vertices = static_cast<int>(vertices_.size());
  c.edges = static_cast<int>(edges_.size());
  c.cells = static_cast<int>(cells_.size());
  for (VertexClass k : classes_) {
    if (k == VertexClass::Boundary) ++c.boundary_vertices;
    if (k == VertexClass::TJunction) ++c.tjunctions;
    if (k == VertexClass::Crossing) ++c.crossings;
  }
  c.interior_vertices = c.tjunctions + c.crossings;
  for (const LEdge& l : ledges_) {
    switch (l.type) {
      case LEdgeType::Boundary: ++c.boundary_ledges; break;
      case LEdgeType::CrossCut: ++c.crosscuts; break;
      case LEdgeType::Ray: ++c.rays; break;
      case LEdgeType::TLEdge: ++c.tledges; break;
    }
  }
  return c;
}

Rational TMesh::min_cell_side() const {
  Rational best = cells_.front().width();
  for (const Rect& c : cells_) best = std::min({best, c.width(), c.height()});
  return best;
}

TMesh TMesh::transformed(const AxisMap& map) const {
  if (sgn(map.sx) <= 0 || sgn(map.sy) <= 0) throw Error(Errc::InvalidArgument, "axis scales must be positive");
  std::vector<Rect> cells;
  cells.reserve(cells_.size());
  for (const Rect& c : cells_) cells.push_back(map.apply(c));
  return from_cells(map.apply(domain_), std::move(cells));
}

}  // namespace tdim
