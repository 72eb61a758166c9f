#pragma once

// Exact dense kernels templated on the scalar. Integer-like scalars must
// support exact division (Bareiss steps divide exactly); rational scalars
// work unchanged.

#include "symplat/numeric.hpp"

#include <utility>
#include <vector>

namespace symplat {

namespace detail {

template <typename Scalar>
bool is_zero(const Scalar& s) {
  return s == Scalar(0);
}

// Swap in the first row at or below k with a nonzero entry in column k.
// Returns false when the column is zero from k down.
template <typename Scalar>
bool pivot_rows(MatrixX<Scalar>& m, Index k, int& swaps) {
  for (Index i = k; i < m.rows(); ++i) {
    if (!is_zero(m(i, k))) {
      if (i != k) {
        m.row(i).swap(m.row(k));
        ++swaps;
      }
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Determinant by fraction-free (Bareiss) elimination.
template <typename Scalar>
Scalar bareiss_determinant(MatrixX<Scalar> m) {
  const Index n = m.rows();
  eigen_assert(m.cols() == n);
  if (n == 0) return Scalar(1);
  Scalar previous(1);
  int swaps = 0;
  for (Index k = 0; k + 1 < n; ++k) {
    if (!detail::pivot_rows(m, k, swaps)) return Scalar(0);
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = Scalar(0);
    }
    previous = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return swaps % 2 == 0 ? det : Scalar(-det);
}

// Solution of A x = b as x = numerators / denominator, where denominator is
// ±det(A). Computed by one-pass fraction-free Gauss-Jordan elimination, so
// every intermediate stays in the scalar ring.
template <typename Scalar>
struct FractionFreeSolution {
  VectorX<Scalar> numerators;
  Scalar denominator;
  bool singular = false;
};

template <typename Scalar>
FractionFreeSolution<Scalar> fraction_free_solve(const MatrixX<Scalar>& a,
                                                 const VectorX<Scalar>& b) {
  const Index n = a.rows();
  eigen_assert(a.cols() == n && b.size() == n);
  MatrixX<Scalar> m(n, n + 1);
  m.leftCols(n) = a;
  m.col(n) = b;

  FractionFreeSolution<Scalar> out;
  if (n == 0) {
    out.numerators = VectorX<Scalar>(0);
    out.denominator = Scalar(1);
    return out;
  }
  Scalar previous(1);
  int swaps = 0;
  for (Index k = 0; k < n; ++k) {
    if (!detail::pivot_rows(m, k, swaps)) {
      out.singular = true;
      out.denominator = Scalar(0);
      return out;
    }
    for (Index i = 0; i < n; ++i) {
      if (i == k) continue;
      for (Index j = 0; j <= n; ++j) {
        if (j == k) continue;
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = Scalar(0);
    }
    previous = m(k, k);
  }
  out.numerators = m.col(n);
  out.denominator = previous;
  return out;
}

// det of each leading k×k block, k = 1..n.
template <typename Scalar>
std::vector<Scalar> leading_principal_minors(const MatrixX<Scalar>& m) {
  std::vector<Scalar> minors;
  minors.reserve(static_cast<std::size_t>(m.rows()));
  for (Index k = 1; k <= m.rows(); ++k) {
    minors.push_back(bareiss_determinant<Scalar>(m.topLeftCorner(k, k)));
  }
  return minors;
}

// Sylvester's criterion: (-1)^k · minor_k > 0 for every k.
// The empty matrix counts as negative definite.
template <typename Scalar>
bool is_negative_definite(const MatrixX<Scalar>& m) {
  const auto minors = leading_principal_minors(m);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const bool odd = (k % 2) == 0;  // block size k + 1
    if (odd ? !(minors[k] < Scalar(0)) : !(minors[k] > Scalar(0))) {
      return false;
    }
  }
  return true;
}

template <typename Scalar>
bool is_positive_definite(const MatrixX<Scalar>& m) {
  for (const auto& minor : leading_principal_minors(m)) {
    if (!(minor > Scalar(0))) return false;
  }
  return true;
}

struct Inertia {
  Index positive = 0;
  Index negative = 0;
  Index zero = 0;
};

// Inertia of a symmetric matrix by congruence diagonalization over a field
// (symmetric row-and-column elimination). Scalar must be a field.
template <typename Field>
Inertia congruence_inertia(MatrixX<Field> m) {
  const Index n = m.rows();
  eigen_assert(m.cols() == n);
  Inertia inertia;
  for (Index k = 0; k < n; ++k) {
    // A nonzero diagonal pivot, if any.
    Index p = -1;
    for (Index i = k; i < n; ++i) {
      if (!detail::is_zero(m(i, i))) {
        p = i;
        break;
      }
    }
    if (p < 0) {
      // All remaining diagonal entries vanish; a nonzero off-diagonal entry
      // m(i, j) lets row/column j be added to i, giving diagonal 2·m(i, j).
      Index pi = -1, pj = -1;
      for (Index i = k; i < n && pi < 0; ++i) {
        for (Index j = i + 1; j < n; ++j) {
          if (!detail::is_zero(m(i, j))) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi < 0) {
        inertia.zero += n - k;
        break;
      }
      m.row(pi) += m.row(pj);
      m.col(pi) += m.col(pj);
      p = pi;
    }
    if (p != k) {
      m.row(p).swap(m.row(k));
      m.col(p).swap(m.col(k));
    }
    const Field pivot = m(k, k);
    for (Index i = k + 1; i < n; ++i) {
      if (detail::is_zero(m(i, k))) continue;
      const Field factor = m(i, k) / pivot;
      m.row(i) -= factor * m.row(k);
      m.col(i) -= factor * m.col(k);
    }
    if (pivot > Field(0)) {
      ++inertia.positive;
    } else {
      ++inertia.negative;
    }
  }
  return inertia;
}

}  // namespace symplat
