#include "symplat/lattice.hpp"

#include "symplat/error.hpp"
#include "symplat/exact_linalg.hpp"
#include "symplat/smith.hpp"

#include <string>

namespace symplat {

std::string_view frame_name(Frame frame) {
  return frame == Frame::primal ? "primal" : "dual";
}

bool FramedVector::is_zero() const {
  for (Index i = 0; i < coords_.size(); ++i) {
    if (coords_(i) != 0) return false;
  }
  return true;
}

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols() || gram_.rows() == 0) {
    throw Error(ErrorCode::not_square, "Gram matrix must be square and nonempty");
  }
  const Index n = gram_.rows();
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (gram_(i, j) != gram_(j, i)) {
        throw Error(ErrorCode::non_symmetric,
                    "Gram matrix is not symmetric at (" + std::to_string(i) +
                        ", " + std::to_string(j) + ")");
      }
    }
  }
  determinant_ = bareiss_determinant<Integer>(gram_);
  if (determinant_ == 0) {
    throw Error(ErrorCode::singular_gram, "Gram matrix has zero determinant");
  }

  inverse_.resize(n, n);
  for (Index j = 0; j < n; ++j) {
    const auto sol =
        fraction_free_solve<Integer>(gram_, IntVector::Unit(n, j));
    for (Index i = 0; i < n; ++i) {
      inverse_(i, j) = Rational(sol.numerators(i), sol.denominator);
    }
  }

  const Inertia inertia = congruence_inertia<Rational>(to_rational(gram_));
  signature_ = {inertia.positive, inertia.negative};
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  IntMatrix g = IntMatrix::Zero(a.rank() + b.rank(), a.rank() + b.rank());
  g.topLeftCorner(a.rank(), a.rank()) = a.gram();
  g.bottomRightCorner(b.rank(), b.rank()) = b.gram();
  return Lattice(std::move(g));
}

namespace lattices {

Lattice hyperbolic_plane() { return Lattice(make_int_matrix({{0, 1}, {1, 0}})); }

Lattice diagonal(std::initializer_list<long> d) {
  IntMatrix g = IntMatrix::Zero(static_cast<Index>(d.size()), static_cast<Index>(d.size()));
  Index i = 0;
  for (long x : d) {
    g(i, i) = x;
    ++i;
  }
  return Lattice(std::move(g));
}

Lattice e8(long scale) {
  // Chain 0-1-2-3-4-5-6 with node 7 attached to node 4.
  IntMatrix g = IntMatrix::Zero(8, 8);
  for (Index i = 0; i < 8; ++i) g(i, i) = 2 * scale;
  const auto edge = [&](Index i, Index j) {
    g(i, j) = -scale;
    g(j, i) = -scale;
  };
  for (Index i = 0; i + 1 < 7; ++i) edge(i, i + 1);
  edge(4, 7);
  return Lattice(std::move(g));
}

Lattice k3() {
  const Lattice u = hyperbolic_plane();
  return direct_sum(direct_sum(direct_sum(u, u), u), direct_sum(e8(), e8()));
}

}  // namespace lattices

namespace {

void require_frame(const FramedVector& v, Frame frame, const char* what) {
  if (v.frame() != frame) {
    throw Error(ErrorCode::frame_mismatch,
                std::string(what) + ": expected a " + std::string(frame_name(frame)) +
                    " vector, got " + std::string(frame_name(v.frame())));
  }
}

void require_length(const Lattice& lattice, Index size, const char* what) {
  if (size != lattice.rank()) {
    throw Error(ErrorCode::length_mismatch,
                std::string(what) + ": vector length " + std::to_string(size) +
                    " does not match lattice rank " + std::to_string(lattice.rank()));
  }
}

IntVector integral_nonzero(const Lattice& lattice, const FramedVector& x,
                           const char* what) {
  require_frame(x, Frame::primal, what);
  require_length(lattice, x.size(), what);
  if (!x.is_integral()) {
    throw Error(ErrorCode::not_integral, std::string(what) + ": vector is not integral");
  }
  if (x.is_zero()) {
    throw Error(ErrorCode::zero_vector, std::string(what) + ": zero vector");
  }
  return x.integral_coords();
}

}  // namespace

Rational q_eval(const Lattice& lattice, const FramedVector& x, const FramedVector& y) {
  require_frame(x, Frame::primal, "q_eval");
  require_frame(y, Frame::primal, "q_eval");
  return q_eval(lattice, x.coords(), y.coords());
}

Rational q_eval(const Lattice& lattice, const RatVector& x, const RatVector& y) {
  require_length(lattice, x.size(), "q_eval");
  require_length(lattice, y.size(), "q_eval");
  Rational total(0);
  for (Index i = 0; i < lattice.rank(); ++i) {
    if (x(i) == 0) continue;
    Rational row(0);
    for (Index j = 0; j < lattice.rank(); ++j) {
      if (y(j) != 0) row += Rational(lattice.gram()(i, j)) * y(j);
    }
    total += x(i) * row;
  }
  return total;
}

Integer q_eval(const Lattice& lattice, const IntVector& x, const IntVector& y) {
  require_length(lattice, x.size(), "q_eval");
  require_length(lattice, y.size(), "q_eval");
  return x.dot(lattice.gram() * y);
}

DiscriminantGroup discriminant_group(const Lattice& lattice) {
  const auto snf = smith_normal_form<Integer>(lattice.gram());
  DiscriminantGroup group;
  for (const auto& d : snf.invariant_factors()) {
    if (d > 1) group.invariant_factors.push_back(d);
  }
  group.order = abs(lattice.determinant());
  return group;
}

FramedVector dual_class(const Lattice& lattice, const FramedVector& x) {
  require_frame(x, Frame::primal, "dual_class");
  require_length(lattice, x.size(), "dual_class");
  return FramedVector::dual(RatVector(to_rational(lattice.gram()) * x.coords()));
}

FramedVector primal_of_dual(const Lattice& lattice, const FramedVector& gamma) {
  require_frame(gamma, Frame::dual, "primal_of_dual");
  require_length(lattice, gamma.size(), "primal_of_dual");
  return FramedVector::primal(RatVector(lattice.inverse_gram() * gamma.coords()));
}

Integer divisibility(const Lattice& lattice, const FramedVector& x) {
  const IntVector v = integral_nonzero(lattice, x, "divisibility");
  return content(IntVector(lattice.gram() * v));
}

bool is_primitive(const Lattice& lattice, const FramedVector& x) {
  return content(integral_nonzero(lattice, x, "is_primitive")) == 1;
}

}  // namespace symplat
