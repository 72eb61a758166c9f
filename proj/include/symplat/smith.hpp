#pragma once

// Smith normal form over an integer-like scalar.

#include "symplat/numeric.hpp"

#include <vector>

namespace symplat {

template <typename Scalar>
struct SmithForm {
  MatrixX<Scalar> left;      // unimodular, rows × rows
  MatrixX<Scalar> diagonal;  // left · input · right
  MatrixX<Scalar> right;     // unimodular, cols × cols

  // Nonzero diagonal entries, each dividing the next.
  std::vector<Scalar> invariant_factors() const {
    std::vector<Scalar> out;
    const Index d = std::min(diagonal.rows(), diagonal.cols());
    for (Index i = 0; i < d && diagonal(i, i) != Scalar(0); ++i) {
      out.push_back(diagonal(i, i));
    }
    return out;
  }
};

// Row/column reduction pivoting on the entry of minimal absolute value in the
// active block. Deterministic; the transforms are not canonical, the
// diagonal is.
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(const MatrixX<Scalar>& input) {
  const Index rows = input.rows();
  const Index cols = input.cols();
  SmithForm<Scalar> s{MatrixX<Scalar>::Identity(rows, rows), input,
                      MatrixX<Scalar>::Identity(cols, cols)};
  MatrixX<Scalar>& d = s.diagonal;
  const auto magnitude = [](const Scalar& x) { return x < 0 ? Scalar(-x) : x; };

  const Index steps = std::min(rows, cols);
  for (Index t = 0; t < steps; ++t) {
    for (;;) {
      Index pr = -1, pc = -1;
      Scalar best(0);
      for (Index j = t; j < cols; ++j) {
        for (Index i = t; i < rows; ++i) {
          if (d(i, j) == 0) continue;
          const Scalar m = magnitude(d(i, j));
          if (pr < 0 || m < best) {
            best = m;
            pr = i;
            pc = j;
          }
        }
      }
      if (pr < 0) return s;  // active block is zero

      if (pr != t) {
        d.row(pr).swap(d.row(t));
        s.left.row(pr).swap(s.left.row(t));
      }
      if (pc != t) {
        d.col(pc).swap(d.col(t));
        s.right.col(pc).swap(s.right.col(t));
      }

      bool dirty = false;
      for (Index i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const Scalar q = d(i, t) / d(t, t);
        d.row(i) -= q * d.row(t);
        s.left.row(i) -= q * s.left.row(t);
        dirty = dirty || d(i, t) != 0;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const Scalar q = d(t, j) / d(t, t);
        d.col(j) -= q * d.col(t);
        s.right.col(j) -= q * s.right.col(t);
        dirty = dirty || d(t, j) != 0;
      }
      if (dirty) continue;

      // Pivot must divide the whole remaining block.
      Index bad = -1;
      for (Index i = t + 1; i < rows && bad < 0; ++i) {
        for (Index j = t + 1; j < cols; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      d.row(t) += d.row(bad);
      s.left.row(t) += s.left.row(bad);
    }
    if (d(t, t) < 0) {
      d.row(t) = -d.row(t);
      s.left.row(t) = -s.left.row(t);
    }
  }
  return s;
}

}  // namespace symplat
