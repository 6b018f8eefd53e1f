#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tdim {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p/q", integers and finite decimals ("0.25"). Throws Error(ParseError).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

struct Point {
  Rational x, y;
};

// Ordered by y, then x.
inline bool operator<(const Point& a, const Point& b) {
  int c = cmp(a.y, b.y);
  return c != 0 ? c < 0 : a.x < b.x;
}
inline bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

struct Rect {
  Rational x0, y0, x1, y1;
  Rational width() const { return x1 - x0; }
  Rational height() const { return y1 - y0; }
};

inline bool operator==(const Rect& a, const Rect& b) {
  return a.x0 == b.x0 && a.y0 == b.y0 && a.x1 == b.x1 && a.y1 == b.y1;
}

// Ordered by lower-left corner (y, then x), then by upper-right.
bool rect_less(const Rect& a, const Rect& b);

// Positive-area intersection of the interiors.
bool interiors_overlap(const Rect& a, const Rect& b);

// Affine map applied independently per axis: x -> sx*x + tx, y -> sy*y + ty (sx, sy > 0).
struct AxisMap {
  Rational sx{1}, tx{0}, sy{1}, ty{0};
  Rational x(const Rational& v) const { return sx * v + tx; }
  Rational y(const Rational& v) const { return sy * v + ty; }
  Rect apply(const Rect& r) const { return {x(r.x0), y(r.y0), x(r.x1), y(r.y1)}; }
};

}  // namespace tdim
