#include <doctest.h>

#include <functional>

#include "support.hpp"
#include "tdim/conformality.hpp"
#include "tdim/error.hpp"
#include "tdim/formulas.hpp"
#include "tdim/oracle.hpp"

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

int count_at(const std::vector<ComponentCount>& v, int level, ComponentClass cls) {
  int n = 0;
  for (const auto& c : v) n += c.level == level && c.cls == cls;
  return n;
}

}  // namespace

TEST_CASE("cubic example on a 2x2 hierarchy") {
  HMesh h = test::load_hmesh("examplefordim1");
  Census c = h.mesh().census();
  CHECK(c.boundary_vertices == 16);
  CHECK(c.crossings == 20);
  CHECK(c.interior_ledges() == 12);
  CHECK(dim_s3(h) == 49);
  CHECK(dim_spline_cofactor(h.mesh(), 3) == 49);
  CHECK(dim_via_extension(h.mesh(), 3, 3) == 49);
  auto ext = classify_components(extend_levels(h.structure(), 3, 3), h.division(), 3);
  CHECK(count_at(ext, 1, ComponentClass::TwoByTwoNeighbor) == 0);
  CHECK(count_at(ext, 2, ComponentClass::TwoByTwoNeighbor) == 1);
}

TEST_CASE("cubic example on a 3x3 hierarchy") {
  HMesh h = test::load_hmesh("examplefordim");
  Census c = h.mesh().census();
  CHECK(c.boundary_vertices == 20);
  CHECK(c.crossings == 29);
  CHECK(c.interior_ledges() == 18);
  CHECK(dim_s3_3x3(h) == 58);
  CHECK(dim_spline_cofactor(h.mesh(), 3) == 58);
  CHECK(dim_via_extension(h.mesh(), 3, 3) == 58);
  auto ext = classify_components(extend_levels(h.structure(), 3, 3), h.division(), 3);
  CHECK(count_at(ext, 1, ComponentClass::Case2b) == 1);
  CHECK(dim_formula(h, 3, false) == 58);
}

TEST_CASE("extension of a tensor grid") {
  TMesh t = TMesh::from_grid(test::lines(4), test::lines(3));  // 3 x 2 cells
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {2, 3}, {3, 2}, {1, 2}}) {
    ExtendedMesh e = extend_mesh(t, m, n);
    CHECK(e.copies_x == m);
    CHECK(e.copies_y == n);
    CHECK(e.step == default_extension_step(t, m, n));
    Census c = e.result.census();
    CHECK(c.tjunctions == 0);
    CHECK(c.crossings == (4 + 2 * m - 2) * (3 + 2 * n - 2));
    CHECK(dim_via_extension(t, m, n) == (3 + m) * (2 + n));
    CHECK(dim_oracle(t, m, n, m - 1, n - 1) == (3 + m) * (2 + n));
  }
  CHECK(extend_mesh(t, 2, 2, Rational(1, 7)).step == Rational(1, 7));
  CHECK_THROWS_AS(extend_mesh(t, 2, 2, Rational(0)), Error);
}

TEST_CASE("extended census identities") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    HMesh h = test::random_hmesh(seed, Division{2, 2}, 3, 5, false);
    Census c = h.mesh().census();
    for (int d : {2, 3}) {
      Census e = extend_mesh(h.mesh(), d, d).result.census();
      // Each boundary vertex of an interior l-edge gains d crossings; the old
      // boundary l-edges become cross-cuts, the outermost copies the new boundary.
      CHECK(e.tjunctions == c.tjunctions);
      CHECK(e.interior_ledges() == c.interior_ledges() + 4 * d);
      if (d == 2) CHECK(e.crossings - e.interior_ledges() == 2 * c.boundary_vertices + c.crossings - c.interior_ledges());
      if (d == 3)
        CHECK(e.crossings - 2 * e.interior_ledges() == 3 * c.boundary_vertices + c.crossings - 2 * c.interior_ledges());
    }
  }
}

TEST_CASE("stage-wise extension stays nested") {
  HMesh h = test::load_hmesh("htmesh");
  LevelStructure e = extend_levels(h.structure(), 2, 2);
  CHECK(e.lev() == h.lev());
  for (int i = 1; i <= e.lev(); ++i)
    CHECK(e.level_set(i).ledges.size() == h.level_set(i).ledges.size());
}

TEST_CASE("formula preconditions") {
  HMesh three = test::load_hmesh("examplefordim");
  HMesh two = test::load_hmesh("exa_dim");
  CHECK(code_of([&] { dim_s3(three); }) == Errc::UnsupportedDivision);
  CHECK(code_of([&] { dim_s2(three); }) == Errc::UnsupportedDivision);
  CHECK(code_of([&] { dim_s3_3x3(two); }) == Errc::UnsupportedDivision);
  CHECK(code_of([&] { dim_s3(test::load_hmesh("nolevel")); }) == Errc::NConditionViolated);
  CHECK(code_of([&] { dim_formula(two, 4, false); }) == Errc::RegimeNotCovered);
  CHECK(code_of([&] { dim_formula(three, 2, false); }) == Errc::RegimeNotCovered);
  HMesh small(test::lines(3), test::lines(3));
  CHECK(code_of([&] { dim_s3_hbc(small); }) == Errc::PreconditionTooCoarse);
  CHECK(code_of([&] { dim_s2_hbc(HMesh(test::lines(2), test::lines(2))); }) == Errc::PreconditionTooCoarse);
  CHECK(dim_s2_hbc(small) == 0);
  CHECK(dim_s2(small) == 16);
}

TEST_CASE("fixtures: formulas agree with the cofactor count") {
  for (const char* name : {"exam1", "htmesh", "exa_dim", "examplefordim1", "cvrlevel", "cvr"}) {
    HMesh h = test::load_hmesh(name);
    CAPTURE(name);
    CHECK(dim_s2(h) == dim_spline_cofactor(h.mesh(), 2));
    CHECK(dim_s2_hbc(h) == dim_W_hbc(h.mesh(), 2));
    if (check_N_ge_2(h)) {
      CHECK(dim_s3(h) == dim_spline_cofactor(h.mesh(), 3));
      CHECK(dim_s3_hbc(h) == dim_W_hbc(h.mesh(), 3));
    }
  }
  for (const char* name : {"examplefordim", "fig9"}) {
    HMesh h = test::load_hmesh(name);
    CHECK(dim_s3_3x3(h) == dim_spline_cofactor(h.mesh(), 3));
    CHECK(dim_s3_3x3_hbc(h) == dim_W_hbc(h.mesh(), 3));
  }
}

TEST_CASE("level decomposition") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    HMesh h = test::random_hmesh(seed, seed % 2 ? Division{2, 2} : Division{3, 3}, 3, 5, true);
    for (int d : {2, 3}) {
      if (d == 2 && h.division() == Division{3, 3}) continue;
      auto levels = dim_level_decomposition(h, d);
      REQUIRE(levels.size() == static_cast<std::size_t>(h.lev() + 1));
      int sum = 0;
      for (const auto& l : levels) {
        CHECK(l.dim_w == l.predicted);
        sum += l.dim_w;
      }
      CHECK(sum == dim_W_hbc(h.mesh(), d));
    }
  }
  HMesh flat(test::lines(6), test::lines(5));
  auto only = dim_level_decomposition(flat, 3);
  REQUIRE(only.size() == 1);
  CHECK(only[0].dim_w == 2);

  HMesh bad = test::load_hmesh("nolevel");
  CHECK(code_of([&] { dim_level_decomposition(bad, 3); }) == Errc::RegimeNotCovered);
  const auto& st = bad.structure();
  CHECK(dim_W_hbc(bad.mesh(), 3) < dim_W(st.level_ledges(1), 3) + dim_W(st.level_ledges(2), 3));
}
