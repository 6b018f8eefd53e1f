#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tdim/rational.hpp"

namespace tdim {

enum class Axis : unsigned char { Horizontal, Vertical };

enum class VertexClass : unsigned char { Boundary, TJunction, Crossing };
enum class LEdgeType : unsigned char { Boundary, CrossCut, Ray, TLEdge };

const char* to_string(VertexClass c);
const char* to_string(LEdgeType t);

struct Edge {
  int v0 = 0, v1 = 0;  // v0 precedes v1 along the axis
  Axis axis = Axis::Horizontal;
};

struct LEdge {
  Axis axis = Axis::Horizontal;
  Rational line;              // y for horizontal, x for vertical
  std::vector<int> vertices;  // ordered along the free coordinate
  LEdgeType type = LEdgeType::Boundary;
  bool interior() const { return type != LEdgeType::Boundary; }
};

// Axis-aligned segment used by the segment-arrangement constructor.
struct Segment {
  Rational x0, y0, x1, y1;
};

struct Census {
  int vertices = 0;
  int boundary_vertices = 0;
  int tjunctions = 0;
  int crossings = 0;
  int interior_vertices = 0;
  int edges = 0;
  int cells = 0;
  int boundary_ledges = 0;
  int crosscuts = 0;
  int rays = 0;
  int tledges = 0;
  int interior_ledges() const { return crosscuts + rays + tledges; }
};

class TMesh {
 public:
  // Throws Error with NotRegular, Overlap, DegenerateCell.
  static TMesh from_cells(const Rect& domain, std::vector<Rect> cells);
  static TMesh from_grid(std::span<const Rational> xs, std::span<const Rational> ys);
  // Builds cells from the arrangement of the domain boundary and the segments.
  // Throws Dangling for segments that end inside a cell, NotRegular for non-rectangular faces.
  static TMesh from_segments(const Rect& domain, std::span<const Segment> segments);

  const Rect& domain() const { return domain_; }
  const std::vector<Rect>& cells() const { return cells_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<LEdge>& ledges() const { return ledges_; }

  VertexClass vertex_class(int v) const { return classes_[v]; }
  int valence(int v) const { return valence_[v]; }
  bool on_boundary(const Point& p) const;
  std::optional<int> find_vertex(const Point& p) const;
  // Index of the l-edge through vertex v along the given axis.
  int ledge_through(int v, Axis axis) const { return through_[v][axis == Axis::Horizontal ? 0 : 1]; }
  // Free coordinates of an l-edge's vertices (x for horizontal l-edges).
  std::vector<Rational> ledge_params(int ledge) const;
  // Lower and upper free coordinate of an l-edge.
  std::pair<Rational, Rational> ledge_extent(int ledge) const;

  Census census() const;
  Rational min_cell_side() const;
  TMesh transformed(const AxisMap& map) const;

 private:
  TMesh() = default;
  void build_topology();

  Rect domain_;
  std::vector<Rect> cells_;
  std::vector<Point> vertices_;
  std::map<Point, int> vertex_index_;
  std::vector<Edge> edges_;
  std::vector<int> valence_;
  std::vector<VertexClass> classes_;
  std::vector<LEdge> ledges_;
  std::vector<std::array<int, 2>> through_;
};

}  // namespace tdim
