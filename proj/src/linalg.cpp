#include "tdim/linalg.hpp"

#include <algorithm>
#include <map>

namespace tdim {

SparseIntRow primitive_row(const SparseRatRow& row) {
  Integer l = 1;
  for (const auto& [c, v] : row)
    if (sgn(v) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  SparseIntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    if (sgn(v) == 0) continue;
    Integer n = l / v.get_den() * v.get_num();
    out.emplace_back(c, std::move(n));
  }
  return primitive_row(std::move(out));
}

SparseIntRow primitive_row(SparseIntRow row) {
  std::erase_if(row, [](const auto& e) { return sgn(e.second) == 0; });
  if (row.empty()) return row;
  Integer g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(row.front().second) < 0) g = -g;
  if (g != 1)
    for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
  return row;
}

namespace {

const Integer* find_entry(const SparseIntRow& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, int c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// target <- a*target - b*pivot, then made primitive.
SparseIntRow combine(const SparseIntRow& target, const Integer& a, const SparseIntRow& pivot,
                     const Integer& b) {
  SparseIntRow out;
  out.reserve(target.size() + pivot.size());
  auto i = target.begin();
  auto j = pivot.begin();
  Integer t;
  while (i != target.end() || j != pivot.end()) {
    if (j == pivot.end() || (i != target.end() && i->first < j->first)) {
      out.emplace_back(i->first, a * i->second);
      ++i;
    } else if (i == target.end() || j->first < i->first) {
      out.emplace_back(j->first, -b * j->second);
      ++j;
    } else {
      t = a * i->second;
      mpz_submul(t.get_mpz_t(), b.get_mpz_t(), j->second.get_mpz_t());
      if (sgn(t) != 0) out.emplace_back(i->first, t);
      ++i;
      ++j;
    }
  }
  return primitive_row(std::move(out));
}

}  // namespace

std::size_t fraction_free_rank(std::vector<SparseIntRow> rows, int ncols) {
  const std::size_t nrows = rows.size();
  std::vector<char> alive(nrows, 0);
  std::vector<std::vector<int>> col_rows(ncols);
  std::vector<int> col_count(ncols, 0);
  for (std::size_t r = 0; r < nrows; ++r) {
    rows[r] = primitive_row(std::move(rows[r]));
    if (rows[r].empty()) continue;
    alive[r] = 1;
    for (const auto& e : rows[r]) {
      col_rows[e.first].push_back(static_cast<int>(r));
      ++col_count[e.first];
    }
  }

  std::vector<int> stamp(nrows, -1);
  std::vector<int> hits;
  std::size_t rank = 0;
  for (int step = 0;; ++step) {
    int col = -1;
    for (int c = 0; c < ncols; ++c) {
      if (col_count[c] > 0 && (col < 0 || col_count[c] < col_count[col])) {
        col = c;
        if (col_count[c] == 1) break;
      }
    }
    if (col < 0) break;

    // Live rows containing col; stale and duplicate entries are dropped here.
    hits.clear();
    for (int r : col_rows[col]) {
      if (!alive[r] || stamp[r] == step) continue;
      if (!find_entry(rows[r], col)) continue;
      stamp[r] = step;
      hits.push_back(r);
    }
    col_rows[col] = hits;

    int pivot = hits.front();
    for (int r : hits)
      if (rows[r].size() < rows[pivot].size()) pivot = r;

    const SparseIntRow prow = std::move(rows[pivot]);
    alive[pivot] = 0;
    for (const auto& e : prow) --col_count[e.first];
    ++rank;
    const Integer& pv = *find_entry(prow, col);

    Integer g, a, b;
    for (int r : hits) {
      if (r == pivot) continue;
      const Integer& rv = *find_entry(rows[r], col);
      mpz_gcd(g.get_mpz_t(), pv.get_mpz_t(), rv.get_mpz_t());
      mpz_divexact(a.get_mpz_t(), pv.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), rv.get_mpz_t(), g.get_mpz_t());
      SparseIntRow next = combine(rows[r], a, prow, b);
      for (const auto& e : rows[r]) --col_count[e.first];
      // Columns new to this row need an index entry.
      auto old = rows[r].begin();
      for (const auto& e : next) {
        while (old != rows[r].end() && old->first < e.first) ++old;
        if (old == rows[r].end() || old->first != e.first) col_rows[e.first].push_back(r);
        ++col_count[e.first];
      }
      rows[r] = std::move(next);
      if (rows[r].empty()) alive[r] = 0;
    }
    col_rows[col].clear();
  }
  return rank;
}

std::size_t bareiss_rank(IntMatrix m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && sgn(m(p, c)) == 0) ++p;
    if (p == nr) continue;
    if (p != r)
      for (std::size_t j = 0; j < nc; ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        Integer v = m(r, c) * m(i, j);
        mpz_submul(v.get_mpz_t(), m(i, c).get_mpz_t(), m(r, j).get_mpz_t());
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

std::size_t rational_gauss_rank(const std::vector<SparseRatRow>& input, int) {
  std::map<int, SparseRatRow> pivots;  // leading column -> row with leading 1
  std::size_t rank = 0;
  for (const SparseRatRow& in : input) {
    std::map<int, Rational> row;
    for (const auto& [c, v] : in)
      if (sgn(v) != 0) row[c] += v;
    std::erase_if(row, [](const auto& e) { return sgn(e.second) == 0; });
    while (!row.empty()) {
      auto lead = row.begin();
      auto it = pivots.find(lead->first);
      if (it == pivots.end()) {
        Rational inv = 1 / lead->second;
        SparseRatRow stored;
        for (auto& [c, v] : row) stored.emplace_back(c, v * inv);
        pivots.emplace(lead->first, std::move(stored));
        ++rank;
        break;
      }
      Rational f = lead->second;
      for (const auto& [c, v] : it->second) {
        Rational& slot = row[c];
        slot -= f * v;
        if (sgn(slot) == 0) row.erase(c);
      }
    }
  }
  return rank;
}

std::vector<SparseRatRow> to_sparse(const RationalMatrix& m) {
  std::vector<SparseRatRow> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) out[r].emplace_back(static_cast<int>(c), m(r, c));
  return out;
}

IntMatrix to_integer_rows(const RationalMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = l / m(r, c).get_den() * m(r, c).get_num();
  }
  return out;
}

}  // namespace tdim
