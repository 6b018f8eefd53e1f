#include <doctest.h>

#include "support.hpp"
#include "tdim/conformality.hpp"
#include "tdim/error.hpp"
#include "tdim/oracle.hpp"

using namespace tdim;

namespace {

OracleOptions opts(OracleOptions::Basis b, int set) {
  OracleOptions o;
  o.basis = b;
  o.sample_set = set;
  return o;
}

}  // namespace

TEST_CASE("tensor grids: piecewise polynomial counts") {
  // k x l cells, non-uniform lines.
  std::vector<Rational> xs{0, Rational(1, 3), 1, Rational(5, 2)};
  std::vector<Rational> ys{-1, 0, Rational(7, 4)};
  TMesh t = TMesh::from_grid(xs, ys);
  const int k = 3, l = 2;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < n; ++b) {
          int expect = (m + 1 + (k - 1) * (m - a)) * (n + 1 + (l - 1) * (n - b));
          CHECK(dim_oracle(t, m, n, a, b) == expect);
        }
}

TEST_CASE("tensor grids: homogeneous boundary conditions") {
  for (int m = 4; m <= 7; ++m)
    for (int n = 4; n <= 7; ++n) {
      TMesh t = TMesh::from_grid(test::lines(m), test::lines(n));
      CHECK(dim_oracle_hbc(t, 2, 2, 1, 1) == (m - 3) * (n - 3));
      CHECK(dim_oracle_hbc(t, 3, 3, 2, 2) == (m - 4) * (n - 4));
    }
  TMesh one = TMesh::from_grid(test::lines(2), test::lines(2));
  CHECK(dim_oracle_hbc(one, 3, 3, 2, 2) == 0);
  CHECK(dim_oracle(one, 3, 3, 2, 2) == 16);
}

TEST_CASE("basis and sample set do not change the answer") {
  TMesh t = test::load_tmesh("tmesh");
  for (int d : {2, 3}) {
    int ref = dim_oracle(t, d, d, d - 1, d - 1);
    CHECK(ref == dim_spline_cofactor(t, d));
    for (auto b : {OracleOptions::Basis::Corner, OracleOptions::Basis::Centered})
      for (int s : {0, 1}) {
        CHECK(dim_oracle(t, d, d, d - 1, d - 1, opts(b, s)) == ref);
        CHECK(dim_oracle_hbc(t, d, d, d - 1, d - 1, opts(b, s)) == dim_W_hbc(t, d));
      }
  }
}

TEST_CASE("mixed degrees and smoothness on a T-mesh") {
  TMesh t = test::load_tmesh("tmesh");
  // C^0 bilinear: one function per vertex that is not a T-junction.
  CHECK(dim_oracle(t, 1, 1, 0, 0) == t.census().vertices - t.census().tjunctions);
  CHECK(dim_oracle(t, 3, 3, 1, 1) >= dim_oracle(t, 3, 3, 2, 2));
  CHECK(dim_oracle(t, 3, 2, 2, 1) >= dim_oracle(t, 2, 2, 1, 1));
}

TEST_CASE("oracle errors") {
  TMesh t = TMesh::from_grid(test::lines(3), test::lines(3));
  CHECK_THROWS_AS(dim_oracle(t, 2, 2, 2, 1), Error);
  CHECK_THROWS_AS(dim_oracle(t, 2, 2, 1, 3), Error);
  OracleOptions tiny;
  tiny.max_unknowns = 10;
  try {
    dim_oracle(t, 2, 2, 1, 1, tiny);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
  OracleOptions bad;
  bad.sample_set = 2;
  CHECK_THROWS_AS(dim_oracle(t, 2, 2, 1, 1, bad), Error);
}

TEST_CASE("affine maps leave the oracle unchanged") {
  HMesh h = test::load_hmesh("exa_dim");
  AxisMap map{Rational(7, 3), Rational(-5), Rational(1, 9), Rational(2, 5)};
  TMesh s = h.mesh().transformed(map);
  for (int d : {2, 3}) {
    CHECK(dim_oracle(h.mesh(), d, d, d - 1, d - 1) == dim_oracle(s, d, d, d - 1, d - 1));
    CHECK(dim_oracle_hbc(h.mesh(), d, d, d - 1, d - 1) == dim_oracle_hbc(s, d, d, d - 1, d - 1));
  }
}
