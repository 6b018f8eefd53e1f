#pragma once

#include <cstddef>

#include "tdim/ledge_set.hpp"
#include "tdim/mesh.hpp"

namespace tdim {

struct OracleOptions {
  enum class Basis { Corner, Centered };
  Basis basis = Basis::Corner;  // local monomials on [0,1] or centered on [-1/2,1/2]
  int sample_set = 0;           // 0 or 1; the two point sets are disjoint
  std::size_t max_unknowns = 12000;
};

// Dimension of piecewise polynomials of bi-degree (m,n), C^alpha across vertical
// and C^beta across horizontal mesh lines, from the global coefficient system.
// Throws UnsupportedSmoothness (alpha >= m or beta >= n) and TooLarge.
int dim_oracle(const TMesh& mesh, int m, int n, int alpha, int beta, OracleOptions options = {});

// Same, with the function and its cross derivatives vanishing on the domain boundary.
int dim_oracle_hbc(const TMesh& mesh, int m, int n, int alpha, int beta, OracleOptions options = {});

// Nullity of the conformality matrix by plain rational elimination.
int dim_oracle_W(const LEdgeSet& set, int degree);

}  // namespace tdim
