#include "tdim/rational.hpp"

#include <cctype>

#include "tdim/error.hpp"

namespace tdim {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotRegular: return "NotRegular";
    case Errc::Overlap: return "Overlap";
    case Errc::Dangling: return "Dangling";
    case Errc::DegenerateCell: return "DegenerateCell";
    case Errc::NoSuchCell: return "NoSuchCell";
    case Errc::AlreadyDivided: return "AlreadyDivided";
    case Errc::LevelOutOfRange: return "LevelOutOfRange";
    case Errc::WrongLevel: return "WrongLevel";
    case Errc::UnsupportedDivision: return "UnsupportedDivision";
    case Errc::DuplicateCoordinate: return "DuplicateCoordinate";
    case Errc::DegenerateDistances: return "DegenerateDistances";
    case Errc::PreconditionTooCoarse: return "PreconditionTooCoarse";
    case Errc::NConditionViolated: return "NConditionViolated";
    case Errc::RegimeNotCovered: return "RegimeNotCovered";
    case Errc::UnsupportedSmoothness: return "UnsupportedSmoothness";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Disconnected: return "Disconnected";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(Errc::ParseError, "bad rational '" + std::string(whole) + "'");
  Integer v(std::string(s), 10);
  return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer p = parse_integer(text.substr(0, slash), text);
    std::string_view qs = text.substr(slash + 1);
    if (!all_digits(qs)) throw Error(Errc::ParseError, "bad rational '" + std::string(text) + "'");
    Integer q(std::string(qs), 10);
    if (q == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    if (!frac.empty() && !all_digits(frac))
      throw Error(Errc::ParseError, "bad decimal '" + std::string(text) + "'");
    std::string_view ip = text.substr(0, dot);
    bool neg = !ip.empty() && ip[0] == '-';
    Integer whole = (ip.empty() || ip == "-" || ip == "+") ? Integer(0) : parse_integer(ip, text);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer f = frac.empty() ? Integer(0) : Integer(std::string(frac), 10);
    Integer num = abs(whole) * scale + f;
    Rational r(neg ? Integer(-num) : num, scale);
    r.canonicalize();
    return r;
  }
  return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool rect_less(const Rect& a, const Rect& b) {
  if (int c = cmp(a.y0, b.y0)) return c < 0;
  if (int c = cmp(a.x0, b.x0)) return c < 0;
  if (int c = cmp(a.y1, b.y1)) return c < 0;
  return a.x1 < b.x1;
}

bool interiors_overlap(const Rect& a, const Rect& b) {
  return a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1;
}

}  // namespace tdim
