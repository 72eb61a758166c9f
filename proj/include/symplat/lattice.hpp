#pragma once

// Integral lattices with a nondegenerate symmetric bilinear form, and
// rational vectors tagged with the frame they live in: primal (divisor
// classes, the lattice itself) or dual (curve classes, functionals on it).

#include "symplat/numeric.hpp"

#include <string_view>
#include <vector>

namespace symplat {

enum class Frame { primal, dual };

std::string_view frame_name(Frame frame);

class FramedVector {
 public:
  FramedVector(Frame frame, RatVector coords)
      : frame_(frame), coords_(std::move(coords)) {}

  static FramedVector primal(RatVector coords) {
    return {Frame::primal, std::move(coords)};
  }
  static FramedVector primal(const IntVector& coords) {
    return {Frame::primal, to_rational(coords)};
  }
  static FramedVector dual(RatVector coords) {
    return {Frame::dual, std::move(coords)};
  }
  static FramedVector dual(const IntVector& coords) {
    return {Frame::dual, to_rational(coords)};
  }

  Frame frame() const { return frame_; }
  const RatVector& coords() const { return coords_; }
  Index size() const { return coords_.size(); }

  bool is_integral() const { return symplat::is_integral(coords_); }
  bool is_zero() const;
  // Throws not_integral.
  IntVector integral_coords() const { return to_integer(coords_); }

  friend bool operator==(const FramedVector& a, const FramedVector& b) {
    return a.frame_ == b.frame_ && a.coords_.size() == b.coords_.size() &&
           a.coords_ == b.coords_;
  }

 private:
  Frame frame_;
  RatVector coords_;
};

struct Signature {
  Index positive = 0;
  Index negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

class Lattice {
 public:
  // Throws not_square, non_symmetric, singular_gram.
  explicit Lattice(IntMatrix gram);

  Index rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const RatMatrix& inverse_gram() const { return inverse_; }
  const Integer& determinant() const { return determinant_; }
  Signature signature() const { return signature_; }

 private:
  IntMatrix gram_;
  RatMatrix inverse_;
  Integer determinant_;
  Signature signature_;
};

inline Lattice make_lattice(const IntMatrix& gram) { return Lattice(gram); }

Lattice direct_sum(const Lattice& a, const Lattice& b);

namespace lattices {
Lattice hyperbolic_plane();                        // U
Lattice diagonal(std::initializer_list<long> d);   // ⟨d1⟩ ⊕ ⟨d2⟩ ⊕ …
Lattice e8(long scale = -1);                       // E8(scale), root lattice scaled
Lattice k3();                                      // U^3 ⊕ E8(-1)^2
}  // namespace lattices

struct DiscriminantGroup {
  std::vector<Integer> invariant_factors;  // each ≥ 2, each dividing the next
  Integer order;

  bool is_trivial() const { return invariant_factors.empty(); }
  bool is_cyclic() const { return invariant_factors.size() <= 1; }
};

// xᵀ·gram·y. Both vectors primal.
Rational q_eval(const Lattice& lattice, const FramedVector& x, const FramedVector& y);
Integer q_eval(const Lattice& lattice, const IntVector& x, const IntVector& y);
Rational q_eval(const Lattice& lattice, const RatVector& x, const RatVector& y);

DiscriminantGroup discriminant_group(const Lattice& lattice);

// α ↦ α^∨ = q(α, ·) expressed in the dual basis: coordinates gram·α.
FramedVector dual_class(const Lattice& lattice, const FramedVector& x);
// γ ↦ γ^∨ = gram⁻¹·γ.
FramedVector primal_of_dual(const Lattice& lattice, const FramedVector& gamma);

// gcd of q(x, b) over basis vectors b. x primal, integral, nonzero.
Integer divisibility(const Lattice& lattice, const FramedVector& x);
// gcd of coordinates is 1. x primal, integral, nonzero.
bool is_primitive(const Lattice& lattice, const FramedVector& x);

}  // namespace symplat
