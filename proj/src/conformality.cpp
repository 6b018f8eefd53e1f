#include "tdim/conformality.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tdim/error.hpp"

namespace tdim {

RationalMatrix ledge_system(std::span<const Rational> params, int degree) {
  if (degree < 0) throw Error(Errc::InvalidArgument, "negative degree");
  std::set<Rational> distinct(params.begin(), params.end());
  if (distinct.size() != params.size()) throw Error(Errc::DuplicateCoordinate, "repeated coordinate on an l-edge");
  RationalMatrix m(degree + 1, params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    Rational p = 1;
    for (int k = 0; k <= degree; ++k) {
      m(k, i) = p;
      p *= params[i];
    }
  }
  return m;
}

ConformalityMatrix conformality_matrix(const LEdgeSet& set, int degree) {
  ConformalityMatrix out;
  out.degree = degree;
  out.columns = set.vertex_ids();
  std::map<int, int> col;
  for (std::size_t i = 0; i < out.columns.size(); ++i) col[out.columns[i]] = static_cast<int>(i);
  out.entries = RationalMatrix(set.size() * (degree + 1), out.columns.size());
  for (std::size_t l = 0; l < set.size(); ++l) {
    RationalMatrix block = ledge_system(set[l].params, degree);
    for (int k = 0; k <= degree; ++k) {
      out.row_ledges.push_back(static_cast<int>(l));
      for (std::size_t i = 0; i < set[l].vertices.size(); ++i)
        out.entries(l * (degree + 1) + k, col[set[l].vertices[i]]) = block(k, i);
    }
  }
  return out;
}

std::string ConformalityMatrix::to_csv() const {
  std::ostringstream os;
  os << "ledge,power";
  for (int c : columns) os << ",v" << c;
  os << '\n';
  for (std::size_t r = 0; r < entries.rows(); ++r) {
    os << row_ledges[r] << ',' << r % (degree + 1);
    for (std::size_t c = 0; c < entries.cols(); ++c) os << ',' << entries(r, c).get_str();
    os << '\n';
  }
  return os.str();
}

namespace {

// Rows t_i^k with t_i = (x_i - x_0) / g integral; spans the same space as x_i^k.
std::vector<SparseIntRow> normalized_rows(const LEdgeRef& l, int degree, const std::map<int, int>& col) {
  const std::size_t r = l.params.size();
  std::vector<SparseIntRow> rows(degree + 1);
  if (r == 0) return rows;
  Rational g = 0;
  for (std::size_t i = 1; i < r; ++i) {
    Rational diff = abs(l.params[i] - l.params[0]);
    if (sgn(g) == 0) {
      g = diff;
    } else {
      Integer num, den;
      mpz_gcd(num.get_mpz_t(), g.get_num_mpz_t(), diff.get_num_mpz_t());
      mpz_lcm(den.get_mpz_t(), g.get_den_mpz_t(), diff.get_den_mpz_t());
      g = Rational(num, den);
      g.canonicalize();
    }
  }
  if (sgn(g) == 0) g = 1;
  std::vector<std::pair<int, Integer>> t;
  for (std::size_t i = 0; i < r; ++i) {
    Rational q = (l.params[i] - l.params[0]) / g;
    t.emplace_back(col.at(l.vertices[i]), q.get_num());
  }
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [c, ti] : t) {
    Integer p = 1;
    for (int k = 0; k <= degree; ++k) {
      if (sgn(p) != 0) rows[k].emplace_back(c, p);
      p *= ti;
    }
  }
  return rows;
}

}  // namespace

std::size_t conformality_rank(const LEdgeSet& set, int degree) {
  for (const auto& l : set.ledges()) {
    std::set<Rational> distinct(l.params.begin(), l.params.end());
    if (distinct.size() != l.params.size()) throw Error(Errc::DuplicateCoordinate, "repeated coordinate on an l-edge");
  }
  std::size_t rank = 0;
  for (const auto& group : set.components()) {
    LEdgeSet part = set.subset(group);
    std::vector<int> ids = part.vertex_ids();
    std::map<int, int> col;
    for (std::size_t i = 0; i < ids.size(); ++i) col[ids[i]] = static_cast<int>(i);
    std::vector<SparseIntRow> rows;
    for (const auto& l : part.ledges())
      for (auto& row : normalized_rows(l, degree, col)) rows.push_back(std::move(row));
    rank += fraction_free_rank(std::move(rows), static_cast<int>(ids.size()));
  }
  return rank;
}

int dim_W(const LEdgeSet& set, int degree) {
  return static_cast<int>(set.vertex_ids().size()) - static_cast<int>(conformality_rank(set, degree));
}

std::vector<Rational> propagate_order1(std::span<const Rational> params, int degree, int pivot,
                                       const Rational& gamma) {
  const int n = static_cast<int>(params.size());
  if (n != degree + 2) throw Error(Errc::InvalidArgument, "need degree+2 coordinates");
  if (pivot < 0 || pivot >= n) throw Error(Errc::InvalidArgument, "pivot out of range");
  // prod_j (x_i - x_j) over j != i; the solution is proportional to its inverse.
  std::vector<Rational> dist(n, Rational(1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) dist[i] *= params[i] - params[j];
  for (const Rational& d : dist)
    if (sgn(d) == 0) throw Error(Errc::DegenerateDistances, "coincident coordinates");
  std::vector<Rational> out(n);
  for (int k = 0; k < n; ++k) out[k] = gamma * dist[pivot] / dist[k];
  return out;
}

const char* to_string(OrderVerdict v) {
  switch (v) {
    case OrderVerdict::Found: return "found";
    case OrderVerdict::NoneExists: return "none";
    case OrderVerdict::Unknown: return "unknown";
  }
  return "?";
}

bool is_reasonable_order(const LEdgeSet& set, int degree, std::span<const int> order) {
  std::set<int> used;
  for (int idx : order) {
    int fresh = 0;
    for (int v : set[idx].vertices)
      if (!used.count(v)) ++fresh;
    if (fresh < degree + 1) return false;
    used.insert(set[idx].vertices.begin(), set[idx].vertices.end());
  }
  return true;
}

ReasonableOrder find_reasonable_order(const LEdgeSet& set, int degree, int exhaustive_limit) {
  const int n = static_cast<int>(set.size());
  ReasonableOrder out;
  if (n <= exhaustive_limit) {
    // reach[mask]: the l-edges in mask can be ordered reasonably; each step appends one l-edge.
    // Fresh vertices of l-edge i after mask depend only on mask.
    std::vector<int> ids = set.vertex_ids();
    std::map<int, int> col;
    for (std::size_t i = 0; i < ids.size(); ++i) col[ids[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> local(n);
    for (int i = 0; i < n; ++i)
      for (int v : set[i].vertices) local[i].push_back(col[v]);
    const std::size_t full = std::size_t{1} << n;
    std::vector<int> prev(full, -2);  // -2 unreachable, -1 root, else last l-edge
    prev[0] = -1;
    std::vector<char> covered(ids.size());
    for (std::size_t mask = 0; mask < full; ++mask) {
      if (prev[mask] == -2) continue;
      std::fill(covered.begin(), covered.end(), 0);
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1)
          for (int c : local[i]) covered[c] = 1;
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1) continue;
        std::size_t next = mask | (std::size_t{1} << i);
        if (prev[next] != -2) continue;
        int fresh = 0;
        for (int c : local[i]) fresh += !covered[c];
        if (fresh >= degree + 1) prev[next] = i;
      }
    }
    if (prev[full - 1] == -2) {
      out.verdict = OrderVerdict::NoneExists;
      return out;
    }
    for (std::size_t mask = full - 1; mask != 0;) {
      int i = prev[mask];
      out.order.push_back(i);
      mask &= ~(std::size_t{1} << i);
    }
    std::reverse(out.order.begin(), out.order.end());
    out.verdict = OrderVerdict::Found;
    return out;
  }
  // Greedy: always take an l-edge with the most fresh vertices.
  std::set<int> used;
  std::vector<char> taken(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1, best_fresh = -1;
    for (int i = 0; i < n; ++i) {
      if (taken[i]) continue;
      int fresh = 0;
      for (int v : set[i].vertices) fresh += !used.count(v);
      if (fresh > best_fresh) {
        best = i;
        best_fresh = fresh;
      }
    }
    if (best_fresh < degree + 1) {
      out.verdict = OrderVerdict::Unknown;
      out.order.clear();
      return out;
    }
    taken[best] = 1;
    out.order.push_back(best);
    used.insert(set[best].vertices.begin(), set[best].vertices.end());
  }
  out.verdict = OrderVerdict::Found;
  return out;
}

int dim_spline_cofactor(const TMesh& mesh, int degree) {
  if (degree < 1) throw Error(Errc::InvalidArgument, "degree must be positive");
  Census c = mesh.census();
  int base = (degree + 1) * (degree + 1) + c.crosscuts * (degree + 1) + c.interior_vertices;
  LEdgeSet set = LEdgeSet::tledges(mesh);
  return base - static_cast<int>(conformality_rank(set, degree));
}

int dim_W_hbc(const TMesh& mesh, int degree) { return dim_W(LEdgeSet::all(mesh), degree); }

}  // namespace tdim
