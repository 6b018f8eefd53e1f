#include <doctest.h>

#include <functional>

#include "support.hpp"
#include "tdim/error.hpp"
#include "tdim/hierarchy.hpp"
#include "tdim/mesh_io.hpp"

using namespace tdim;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

// Level partition, components and crossing counts checked against brute force.
void check_levels(const HMesh& h) {
  const TMesh& fine = h.mesh();
  const auto& st = h.structure();
  std::vector<int> seen(fine.ledges().size(), 0);
  for (int i = 0; i <= h.lev(); ++i) {
    LevelSet ls = h.level_set(i);
    for (int l : ls.ledges) {
      ++seen[l];
      CHECK(st.ledge_level(l) == i);
      if (i > 0) {
        CHECK(fine.ledges()[l].interior());
        CHECK(h.crossing_count(l) == test::crossing_count_by_sampling(h.stage(i - 1), fine, l));
      }
    }
    for (int v : ls.vertices) CHECK(st.vertex_level(v) == i);
    if (i == 0) continue;
    std::set<std::set<int>> got;
    for (const auto& c : st.components(i)) {
      CHECK(c.level == i);
      CHECK(c.ledges.size() == c.crossing_counts.size());
      got.insert(std::set<int>(c.ledges.begin(), c.ledges.end()));
      std::size_t parents = 0;
      for (std::size_t k = 0; k < c.ledges.size(); ++k) CHECK(c.crossing_counts[k] == h.crossing_count(c.ledges[k]));
      parents = c.parent_cells.size();
      CHECK(parents >= 1);
    }
    CHECK(got == test::geometric_components(fine, ls.ledges));
  }
  for (std::size_t l = 0; l < seen.size(); ++l) CHECK(seen[l] == 1);
  // Each stage is a submesh of the next: its vertices survive.
  for (int k = 0; k < h.lev(); ++k)
    for (const auto& p : h.stage(k).vertices()) CHECK(h.stage(k + 1).find_vertex(p).has_value());
}

}  // namespace

TEST_CASE("division parsing") {
  CHECK(parse_division("2x2") == Division{2, 2});
  CHECK(parse_division("3x3") == Division{3, 3});
  CHECK(to_string(Division{3, 3}) == "3x3");
  CHECK(code_of([] { parse_division("2x3"); }) == Errc::UnsupportedDivision);
  CHECK(code_of([] { parse_division("4x4"); }) == Errc::UnsupportedDivision);
}

TEST_CASE("two-level example: level sets and crossing counts") {
  HMesh h = test::load_hmesh("exam1");
  CHECK(h.lev() == 2);
  LevelSet l1 = h.level_set(1);
  CHECK(l1.ledges.size() == 4);
  CHECK(l1.vertices.size() == 16);
  CHECK(l1.closure_vertices.size() == 18);
  for (int l : l1.ledges) CHECK(h.crossing_count(l) == 2);
  for (int l : h.level_set(2).ledges) CHECK(h.crossing_count(l) == 1);
  CHECK(h.structure().components(1).size() == 1);
  CHECK_FALSE(check_N_ge_2(h));
  CHECK(code_of([&] { h.crossing_count(h.level_set(0).ledges.front()); }) == Errc::WrongLevel);
  check_levels(h);
}

TEST_CASE("component counts per level") {
  HMesh h = test::load_hmesh("htmesh");
  CHECK(h.structure().components(1).size() == 1);
  CHECK(h.structure().components(2).size() == 3);
  check_levels(h);
  for (const char* name : {"exa_dim", "examplefordim1", "examplefordim", "nolevel", "fig9", "cvrlevel", "cvr"})
    check_levels(test::load_hmesh(name));
}

TEST_CASE("refinement errors") {
  HMesh h(test::lines(4), test::lines(4));
  CHECK(h.level_cells(0).size() == 9);
  std::vector<int> bad{9};
  CHECK(code_of([&] { h.refine(0, bad); }) == Errc::NoSuchCell);
  std::vector<int> one{4};
  HMesh r = h.refine(0, one);
  CHECK(r.level_cells(1).size() == 4);
  CHECK(r.is_divided(0, 4));
  CHECK(code_of([&] { r.refine(0, one); }) == Errc::AlreadyDivided);
  CHECK(code_of([&] { r.refine(3, one); }) == Errc::LevelOutOfRange);
  std::vector<Rational> dup{0, 1, 1, 2};
  CHECK(code_of([&] { HMesh(dup, test::lines(3)); }) == Errc::InvalidArgument);
  CHECK(code_of([] { HMesh(test::lines(3), test::lines(3), Division{4, 4}); }) == Errc::UnsupportedDivision);
  CHECK(r.find_cell(1, Rational(3, 2), 1) == 1);
  CHECK(r.find_cell(1, Rational(1, 3), 1) == -1);
}

TEST_CASE("3x3 refinement produces nine children") {
  HMesh h(test::lines(3), test::lines(3), Division{3, 3});
  std::vector<int> ids{0};
  HMesh r = h.refine(0, ids);
  CHECK(r.level_cells(1).size() == 9);
  CHECK(r.level_set(1).ledges.size() == 4);
  for (int l : r.level_set(1).ledges) CHECK(r.crossing_count(l) == 1);
}

TEST_CASE("script and JSON round trip") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    HMesh h = test::random_hmesh(seed, seed % 2 ? Division{2, 2} : Division{3, 3}, 3, 5, false);
    HMesh back = HMesh::from_script(h.xs(), h.ys(), h.division(), h.script());
    CHECK(mesh_to_json(back.mesh()) == mesh_to_json(h.mesh()));
    HMesh j = hmesh_from_json(nlohmann::json::parse(hmesh_to_json(h).dump()));
    CHECK(hmesh_to_json(j) == hmesh_to_json(h));
  }
}

TEST_CASE("random hierarchies satisfy the level invariants") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    HMesh h = test::random_hmesh(seed, seed % 3 ? Division{2, 2} : Division{3, 3}, 3, 5, seed % 2 == 0);
    check_levels(h);
    if (seed % 2 == 0) CHECK(check_N_ge_2(h));
  }
}
