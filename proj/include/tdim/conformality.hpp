#pragma once

#include <span>
#include <string>
#include <vector>

#include "tdim/ledge_set.hpp"
#include "tdim/linalg.hpp"

namespace tdim {

// (d+1) x r matrix with entries x_i^k, k = 0..d. Throws DuplicateCoordinate.
RationalMatrix ledge_system(std::span<const Rational> params, int degree);

struct ConformalityMatrix {
  int degree = 0;
  std::vector<int> columns;     // vertex ids, ascending
  std::vector<int> row_ledges;  // index into the l-edge set for each row
  RationalMatrix entries;
  std::string to_csv() const;
};

ConformalityMatrix conformality_matrix(const LEdgeSet& set, int degree);

// Rank of the conformality matrix, computed per connected component on
// normalized integer rows.
std::size_t conformality_rank(const LEdgeSet& set, int degree);

// Dimension of the space of vertex cofactors satisfying every l-edge condition.
int dim_W(const LEdgeSet& set, int degree);

// Given d+2 distinct coordinates and the cofactor at `pivot`, the unique
// solution of the order-d system. Throws DegenerateDistances.
std::vector<Rational> propagate_order1(std::span<const Rational> params, int degree, int pivot,
                                       const Rational& gamma);

enum class OrderVerdict { Found, NoneExists, Unknown };
const char* to_string(OrderVerdict v);

struct ReasonableOrder {
  OrderVerdict verdict = OrderVerdict::Unknown;
  std::vector<int> order;  // indices into the set, when found
};

// Exhaustive for up to `exhaustive_limit` l-edges, greedy beyond that.
ReasonableOrder find_reasonable_order(const LEdgeSet& set, int degree, int exhaustive_limit = 16);
bool is_reasonable_order(const LEdgeSet& set, int degree, std::span<const int> order);

// Equal-degree, maximal-smoothness spline space dimension from the T l-edge conditions.
int dim_spline_cofactor(const TMesh& mesh, int degree);
// Same space with homogeneous boundary conditions: all l-edges constrain.
int dim_W_hbc(const TMesh& mesh, int degree);

}  // namespace tdim
