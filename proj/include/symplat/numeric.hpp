#pragma once

// Exact scalar types and dense Eigen aliases used throughout symplat.
//
// Expression templates are disabled on the multiprecision types so that
// they interoperate cleanly with Eigen's own expression machinery.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace symplat {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = MatrixX<Integer>;
using IntVector = VectorX<Integer>;
using RatMatrix = MatrixX<Rational>;
using RatVector = VectorX<Rational>;

using Index = Eigen::Index;

inline Integer numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline Integer denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }
inline Rational abs(const Rational& a) { return a < 0 ? Rational(-a) : a; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}
inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return Integer(0);
  return abs(Integer(a / gcd(a, b) * b));
}

inline int sign(const Integer& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }
inline int sign(const Rational& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

// Floor of the square root of a nonnegative integer.
inline Integer isqrt(const Integer& a) { return boost::multiprecision::sqrt(a); }

// floor/ceil of a rational number.
Integer floor(const Rational& r);
Integer ceil(const Rational& r);

// Lowest-terms decimal text: "p/q", or "n" for integers.
std::string to_string(const Integer& a);
std::string to_string(const Rational& r);

// Accepts "n", "-n", "p/q". Throws Error{ErrorCode::parse} on malformed text
// or a zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

template <typename Derived>
bool is_integral(const Eigen::MatrixBase<Derived>& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (denominator(v(i)) != 1) return false;
  }
  return true;
}

IntVector to_integer(const RatVector& v);  // requires is_integral(v)
RatVector to_rational(const IntVector& v);
RatMatrix to_rational(const IntMatrix& m);

// gcd of all entries (0 for the zero vector).
Integer content(const IntVector& v);

// Lexicographic order on equal-length integer vectors.
std::strong_ordering lex_compare(const IntVector& a, const IntVector& b);
struct LexLess {
  bool operator()(const IntVector& a, const IntVector& b) const {
    return lex_compare(a, b) < 0;
  }
};

IntVector make_int_vector(std::initializer_list<long> values);
RatVector make_rat_vector(std::initializer_list<Rational> values);
IntMatrix make_int_matrix(std::initializer_list<std::initializer_list<long>> rows);

}  // namespace symplat
