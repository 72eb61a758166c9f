#include "symplat/numeric.hpp"

#include "symplat/error.hpp"

#include <cctype>

namespace symplat {

Integer floor(const Rational& r) {
  const Integer n = numerator(r);
  const Integer d = denominator(r);
  Integer q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

Integer ceil(const Rational& r) { return -floor(Rational(-r)); }

std::string to_string(const Integer& a) { return a.str(); }

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool signed_digits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

Integer integer_from(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!signed_digits(text)) {
    throw Error(ErrorCode::parse, "malformed integer '" + std::string(text) + "'");
  }
  return integer_from(text);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!signed_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::parse, "malformed rational '" + std::string(text) + "'");
  }
  const Integer d = integer_from(den);
  if (d == 0) {
    throw Error(ErrorCode::parse, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(integer_from(num), d);
}

IntVector to_integer(const RatVector& v) {
  IntVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    if (denominator(v(i)) != 1) {
      throw Error(ErrorCode::not_integral, "vector has non-integral coordinates");
    }
    out(i) = numerator(v(i));
  }
  return out;
}

RatVector to_rational(const IntVector& v) { return v.cast<Rational>(); }
RatMatrix to_rational(const IntMatrix& m) { return m.cast<Rational>(); }

Integer content(const IntVector& v) {
  Integer g(0);
  for (Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  return abs(g);
}

std::strong_ordering lex_compare(const IntVector& a, const IntVector& b) {
  const Index n = std::min(a.size(), b.size());
  for (Index i = 0; i < n; ++i) {
    if (a(i) < b(i)) return std::strong_ordering::less;
    if (b(i) < a(i)) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

IntVector make_int_vector(std::initializer_list<long> values) {
  IntVector v(static_cast<Index>(values.size()));
  Index i = 0;
  for (long x : values) v(i++) = Integer(x);
  return v;
}

RatVector make_rat_vector(std::initializer_list<Rational> values) {
  RatVector v(static_cast<Index>(values.size()));
  Index i = 0;
  for (const auto& x : values) v(i++) = x;
  return v;
}

IntMatrix make_int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) {
      throw Error(ErrorCode::not_square, "ragged matrix literal");
    }
    Index j = 0;
    for (long x : row) m(i, j++) = Integer(x);
    ++i;
  }
  return m;
}

}  // namespace symplat
