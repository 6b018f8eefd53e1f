#include "tdim/oracle.hpp"

#include <map>

#include "tdim/conformality.hpp"
#include "tdim/error.hpp"
#include "tdim/linalg.hpp"

namespace tdim {

namespace {

struct Frame {
  Rational origin, width;  // local coordinate (t - origin) / width
};

Frame frame(const Rational& lo, const Rational& hi, OracleOptions::Basis basis) {
  if (basis == OracleOptions::Basis::Corner) return {lo, hi - lo};
  return {(lo + hi) / 2, hi - lo};
}

// n+1 interior points of (lo, hi).
std::vector<Rational> samples(const Rational& lo, const Rational& hi, int count, int set) {
  std::vector<Rational> out;
  const Rational step(1, count + 1);
  const Rational shift = set == 0 ? Rational(0) : Rational(1, 2 * (count + 1) * (count + 1));
  for (int s = 0; s < count; ++s) out.push_back(lo + (hi - lo) * (step * (s + 1) - shift));
  return out;
}

Rational power(const Rational& b, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

Rational falling(int i, int k) {
  Rational r = 1;
  for (int t = 0; t < k; ++t) r *= i - t;
  return r;
}

class System {
 public:
  System(const TMesh& mesh, int m, int n, OracleOptions opt) : mesh_(mesh), m_(m), n_(n), opt_(opt) {}

  std::size_t unknowns() const { return mesh_.cells().size() * (m_ + 1) * (n_ + 1); }

  // Coefficients of d^k/dt^k (across the line) of cell c's polynomial at the point
  // where the across-coordinate equals `across` and the along-coordinate equals `along`.
  void add_trace(SparseRatRow& row, int cell, bool vertical_line, const Rational& across, const Rational& along,
                 int k, int sign) const {
    const Rect& r = mesh_.cells()[cell];
    Frame fx = frame(r.x0, r.x1, opt_.basis), fy = frame(r.y0, r.y1, opt_.basis);
    const int base = cell * (m_ + 1) * (n_ + 1);
    if (vertical_line) {
      Rational u = (across - fx.origin) / fx.width, v = (along - fy.origin) / fy.width;
      Rational scale = 1 / power(fx.width, k);
      for (int i = k; i <= m_; ++i)
        for (int j = 0; j <= n_; ++j) {
          Rational c = sign * falling(i, k) * power(u, i - k) * scale * power(v, j);
          if (sgn(c) != 0) row.emplace_back(base + i * (n_ + 1) + j, c);
        }
    } else {
      Rational u = (along - fx.origin) / fx.width, v = (across - fy.origin) / fy.width;
      Rational scale = 1 / power(fy.width, k);
      for (int i = 0; i <= m_; ++i)
        for (int j = k; j <= n_; ++j) {
          Rational c = sign * falling(j, k) * power(v, j - k) * scale * power(u, i);
          if (sgn(c) != 0) row.emplace_back(base + i * (n_ + 1) + j, c);
        }
    }
  }

  // Continuity of derivatives 0..order across one shared segment. `second` < 0 means zero trace.
  void add_segment(int first, int second, bool vertical_line, const Rational& line, const Rational& lo,
                   const Rational& hi, int order) {
    const int along_degree = vertical_line ? n_ : m_;
    for (const Rational& t : samples(lo, hi, along_degree + 1, opt_.sample_set))
      for (int k = 0; k <= order; ++k) {
        SparseRatRow row;
        add_trace(row, first, vertical_line, line, t, k, 1);
        if (second >= 0) add_trace(row, second, vertical_line, line, t, k, -1);
        rows_.push_back(primitive_row(merge(std::move(row))));
      }
  }

  std::vector<SparseIntRow>& rows() { return rows_; }

 private:
  static SparseRatRow merge(SparseRatRow row) {
    std::map<int, Rational> acc;
    for (auto& [c, v] : row) acc[c] += v;
    SparseRatRow out;
    for (auto& [c, v] : acc)
      if (sgn(v) != 0) out.emplace_back(c, v);
    return out;
  }

  const TMesh& mesh_;
  int m_, n_;
  OracleOptions opt_;
  std::vector<SparseIntRow> rows_;
};

int oracle(const TMesh& mesh, int m, int n, int alpha, int beta, OracleOptions opt, bool hbc) {
  if (m < 0 || n < 0) throw Error(Errc::InvalidArgument, "negative degree");
  if (alpha < 0 || beta < 0 || alpha >= m || beta >= n)
    throw Error(Errc::UnsupportedSmoothness, "need 0 <= alpha < m and 0 <= beta < n");
  if (opt.sample_set != 0 && opt.sample_set != 1) throw Error(Errc::InvalidArgument, "sample set must be 0 or 1");
  System sys(mesh, m, n, opt);
  if (sys.unknowns() > opt.max_unknowns)
    throw Error(Errc::TooLarge, std::to_string(sys.unknowns()) + " unknowns");

  const auto& cells = mesh.cells();
  const Rect& dom = mesh.domain();
  std::map<Rational, std::vector<int>> by_x0, by_x1, by_y0, by_y1;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    by_x0[cells[i].x0].push_back(static_cast<int>(i));
    by_x1[cells[i].x1].push_back(static_cast<int>(i));
    by_y0[cells[i].y0].push_back(static_cast<int>(i));
    by_y1[cells[i].y1].push_back(static_cast<int>(i));
  }
  // Vertical lines: left cells end where right cells start.
  for (const auto& [x, lefts] : by_x1) {
    if (x == dom.x1) continue;
    for (int a : lefts)
      for (int b : by_x0[x]) {
        Rational lo = std::max(cells[a].y0, cells[b].y0), hi = std::min(cells[a].y1, cells[b].y1);
        if (lo < hi) sys.add_segment(a, b, true, x, lo, hi, alpha);
      }
  }
  for (const auto& [y, lows] : by_y1) {
    if (y == dom.y1) continue;
    for (int a : lows)
      for (int b : by_y0[y]) {
        Rational lo = std::max(cells[a].x0, cells[b].x0), hi = std::min(cells[a].x1, cells[b].x1);
        if (lo < hi) sys.add_segment(a, b, false, y, lo, hi, beta);
      }
  }
  if (hbc) {
    for (int c : by_x0[dom.x0]) sys.add_segment(c, -1, true, dom.x0, cells[c].y0, cells[c].y1, alpha);
    for (int c : by_x1[dom.x1]) sys.add_segment(c, -1, true, dom.x1, cells[c].y0, cells[c].y1, alpha);
    for (int c : by_y0[dom.y0]) sys.add_segment(c, -1, false, dom.y0, cells[c].x0, cells[c].x1, beta);
    for (int c : by_y1[dom.y1]) sys.add_segment(c, -1, false, dom.y1, cells[c].x0, cells[c].x1, beta);
  }
  const int unknowns = static_cast<int>(sys.unknowns());
  return unknowns - static_cast<int>(fraction_free_rank(std::move(sys.rows()), unknowns));
}

}  // namespace

int dim_oracle(const TMesh& mesh, int m, int n, int alpha, int beta, OracleOptions options) {
  return oracle(mesh, m, n, alpha, beta, options, false);
}

int dim_oracle_hbc(const TMesh& mesh, int m, int n, int alpha, int beta, OracleOptions options) {
  return oracle(mesh, m, n, alpha, beta, options, true);
}

int dim_oracle_W(const LEdgeSet& set, int degree) {
  ConformalityMatrix cm = conformality_matrix(set, degree);
  std::size_t rank = rational_gauss_rank(to_sparse(cm.entries), static_cast<int>(cm.columns.size()));
  return static_cast<int>(cm.columns.size()) - static_cast<int>(rank);
}

}  // namespace tdim
