#pragma once

// Fincke–Pohst enumeration of integer vectors under a positive definite
// rational quadratic form. Interval endpoints come from integer square
// roots and every candidate is rechecked exactly, so no solution is lost to
// rounding.

#include "symplat/exact_linalg.hpp"
#include "symplat/numeric.hpp"

#include <functional>

namespace symplat {

// Calls visit(x) for every integer x with xᵀ·form·x ≤ bound. The form must be
// symmetric positive definite.
inline void enumerate_short_vectors(
    const RatMatrix& form, const Rational& bound,
    const std::function<void(const IntVector&)>& visit) {
  const Index n = form.rows();
  if (bound < 0) return;

  // form(x) = Σ_i diag_i · (x_i + Σ_{j>i} coeff(i, j)·x_j)²
  RatVector diag(n);
  RatMatrix coeff = RatMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    Rational d = form(i, i);
    for (Index k = 0; k < i; ++k) d -= diag(k) * coeff(k, i) * coeff(k, i);
    diag(i) = d;
    for (Index j = i + 1; j < n; ++j) {
      Rational c = form(i, j);
      for (Index k = 0; k < i; ++k) c -= diag(k) * coeff(k, i) * coeff(k, j);
      coeff(i, j) = c / d;
    }
  }

  IntVector x = IntVector::Zero(n);
  if (n == 0) {
    visit(x);
    return;
  }

  // Depth-first from the last coordinate down; remaining is the unspent
  // part of the bound.
  std::function<void(Index, const Rational&)> descend =
      [&](Index i, const Rational& remaining) {
        Rational center(0);
        for (Index j = i + 1; j < n; ++j) center += coeff(i, j) * Rational(x(j));
        const Rational width = remaining / diag(i);
        const Integer root = isqrt(floor(width));
        const Integer lo = floor(Rational(-center)) - root - 1;
        const Integer hi = ceil(Rational(-center)) + root + 1;
        for (Integer v = lo; v <= hi; ++v) {
          const Rational shifted = Rational(v) + center;
          const Rational used = diag(i) * shifted * shifted;
          if (used > remaining) continue;
          x(i) = v;
          if (i == 0) {
            visit(x);
          } else {
            descend(i - 1, remaining - used);
          }
        }
        x(i) = 0;
      };
  descend(n - 1, bound);
}

}  // namespace symplat
