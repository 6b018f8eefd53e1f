#include <doctest.h>

#include "support.hpp"
#include "tdim/error.hpp"
#include "tdim/mesh.hpp"
#include "tdim/mesh_io.hpp"

using namespace tdim;
using test::q;

namespace {

void check_topology(const TMesh& m) {
  // Every edge belongs to exactly one l-edge.
  std::size_t covered = 0;
  for (const auto& l : m.ledges()) covered += l.vertices.size() - 1;
  CHECK(covered == m.edges().size());
  // Each vertex lies on one l-edge per axis.
  std::vector<int> per_vertex(m.vertices().size(), 0);
  for (const auto& l : m.ledges())
    for (int v : l.vertices) ++per_vertex[v];
  for (std::size_t v = 0; v < m.vertices().size(); ++v) {
    CHECK(per_vertex[v] == 2);
    CHECK(m.ledges()[m.ledge_through(static_cast<int>(v), Axis::Horizontal)].axis == Axis::Horizontal);
    CHECK(m.ledges()[m.ledge_through(static_cast<int>(v), Axis::Vertical)].axis == Axis::Vertical);
  }
  Census c = m.census();
  CHECK(c.vertices == c.boundary_vertices + c.tjunctions + c.crossings);
  CHECK(c.boundary_ledges == 4);
  // Euler for a rectangle subdivision: V - E + F = 1.
  CHECK(c.vertices - c.edges + c.cells == 1);
  // Valence sum is twice the edge count.
  int valence = 0;
  for (std::size_t v = 0; v < m.vertices().size(); ++v) valence += m.valence(static_cast<int>(v));
  CHECK(valence == 2 * c.edges);
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("17") == 17);
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.5") == Rational(-3, 2));
  CHECK(to_string(Rational(9, 10)) == "9/10");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("tensor grid census") {
  for (int m = 2; m <= 6; ++m)
    for (int n = 2; n <= 6; ++n) {
      auto xs = test::lines(m), ys = test::lines(n);
      TMesh t = TMesh::from_grid(xs, ys);
      Census c = t.census();
      CHECK(c.crossings == (m - 2) * (n - 2));
      CHECK(c.tjunctions == 0);
      CHECK(c.boundary_vertices == 2 * m + 2 * n - 4);
      CHECK(c.crosscuts == m - 2 + n - 2);
      CHECK(c.tledges == 0);
      CHECK(c.rays == 0);
      check_topology(t);
    }
}

TEST_CASE("T-mesh vertex and l-edge classification") {
  TMesh t = test::load_tmesh("tmesh");
  check_topology(t);
  auto cls = [&](int x, int y) { return t.vertex_class(*t.find_vertex({Rational(x), Rational(y)})); };
  CHECK(cls(2, 4) == VertexClass::Crossing);
  CHECK(cls(3, 2) == VertexClass::Crossing);
  CHECK(cls(3, 1) == VertexClass::TJunction);
  CHECK(cls(1, 2) == VertexClass::TJunction);
  CHECK(cls(4, 2) == VertexClass::TJunction);
  CHECK(cls(3, 6) == VertexClass::Boundary);
  // The vertical l-edge x=3 runs from the top boundary to a T-junction: a ray.
  int ray = t.ledge_through(*t.find_vertex({Rational(3), Rational(6)}), Axis::Vertical);
  CHECK(t.ledges()[ray].type == LEdgeType::Ray);
  CHECK(t.census().rays == 1);
}

TEST_CASE("segment arrangement matches explicit cells") {
  std::vector<Segment> segs{{0, 1, 2, 1}, {1, 0, 1, 1}};
  TMesh a = TMesh::from_segments({0, 0, 2, 2}, segs);
  TMesh b = TMesh::from_cells({0, 0, 2, 2}, {{0, 0, 1, 1}, {1, 0, 2, 1}, {0, 1, 2, 2}});
  CHECK(mesh_to_json(a) == mesh_to_json(b));
  CHECK(a.census().tjunctions == 1);
}

TEST_CASE("invalid meshes are rejected with typed errors") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidArgument;
  };
  CHECK(code([] { TMesh::from_cells({0, 0, 2, 1}, {{0, 0, 2, 1}, {1, 0, 2, 1}}); }) == Errc::Overlap);
  CHECK(code([] { TMesh::from_cells({0, 0, 2, 1}, {{0, 0, 1, 1}}); }) == Errc::NotRegular);
  CHECK(code([] { TMesh::from_cells({0, 0, 2, 1}, {{0, 0, 0, 1}, {0, 0, 2, 1}}); }) == Errc::DegenerateCell);
  CHECK(code([] { TMesh::from_cells({0, 0, 2, 1}, {{0, 0, 1, 1}, {1, 0, 3, 1}}); }) == Errc::NotRegular);
  std::vector<Segment> dangling{{1, 0, 1, Rational(1, 2)}};
  CHECK(code([&] { TMesh::from_segments({0, 0, 2, 1}, dangling); }) == Errc::Dangling);
  // An L-shaped face cannot be a cell.
  std::vector<Segment> lshape{{0, 1, 1, 1}, {1, 1, 1, 2}};
  CHECK(code([&] { TMesh::from_segments({0, 0, 2, 2}, lshape); }) == Errc::NotRegular);
}

TEST_CASE("JSON round trip is exact") {
  auto xs = std::vector<Rational>{0, Rational(1, 3), Rational(9, 10), 2};
  auto ys = std::vector<Rational>{Rational(-1, 7), 0, 5};
  TMesh t = TMesh::from_grid(xs, ys);
  auto j = mesh_to_json(t);
  TMesh back = mesh_from_json(nlohmann::json::parse(j.dump()));
  CHECK(mesh_to_json(back) == j);
  REQUIRE(back.vertices().size() == t.vertices().size());
  for (std::size_t i = 0; i < t.vertices().size(); ++i) CHECK(back.vertices()[i] == t.vertices()[i]);
  CHECK_THROWS_AS(mesh_from_json(nlohmann::json::parse(R"({"domain":[0,0,1,1],"cells":[[0,0,1.5,1]]})")), Error);
  CHECK_THROWS_AS(mesh_from_json(nlohmann::json::parse(R"({"cells":[]})")), Error);
}

TEST_CASE("affine maps preserve topology") {
  TMesh t = test::load_tmesh("tmesh");
  TMesh s = t.transformed({q("3/7"), q("-2"), q("5"), q("1/3")});
  Census a = t.census(), b = s.census();
  CHECK(a.crossings == b.crossings);
  CHECK(a.tjunctions == b.tjunctions);
  CHECK(a.rays == b.rays);
  CHECK(a.tledges == b.tledges);
  CHECK(a.edges == b.edges);
}
