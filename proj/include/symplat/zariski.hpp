#pragma once

// Boucksom–Zariski decomposition D = P + N relative to a finite list of
// prime exceptional classes: P is q-nef against every prime, N is a
// positive combination of primes with negative definite Gram matrix, and
// q(P, N) = 0.

#include "symplat/bounds.hpp"
#include "symplat/cones.hpp"

#include <span>
#include <vector>

namespace symplat {

struct ZariskiDecomposition {
  FramedVector positive;
  FramedVector negative;
  std::vector<std::size_t> support;   // ascending indices into ctx.primes()
  std::vector<Rational> coefficients;  // per support index, all > 0
  Integer denominator_lcm{1};          // lcm of coefficient denominators
};

// Iterative support growth: start from the primes D meets negatively, solve
// q(D - Σ a_i E_i, E_j) = 0 on the support, add primes the positive part
// still meets negatively, repeat.
// Errors: not_pseudo_effective (support Gram not negative definite),
// inconsistent_prime_set (a solved coefficient is negative),
// frame_mismatch, length_mismatch.
ZariskiDecomposition zariski_decompose(const ConeContext& ctx, const FramedVector& d);

struct VerificationReport {
  bool sums_to_divisor = false;  // P + N = D
  bool nef = false;              // q(P, E) ≥ 0 for every prime
  bool exceptional = false;      // N = Σ a_i E_i, a_i > 0, support Gram negative definite
  bool orthogonal = false;       // q(P, N) = 0
  // The support found for N when it is a positive combination of primes.
  std::vector<std::size_t> support;
  std::vector<Rational> coefficients;

  bool ok() const { return sums_to_divisor && nef && exceptional && orthogonal; }
};

// Checks each condition exactly. The support of N is searched over subsets of
// `primes` (exponential in their number; meant for short lists). No
// context invariants are assumed of `primes`.
VerificationReport verify_decomposition(const Lattice& lattice, std::span<const IntVector> primes,
                                        const FramedVector& d, const FramedVector& p,
                                        const FramedVector& n);
VerificationReport verify_decomposition(const ConeContext& ctx, const FramedVector& d,
                                        const FramedVector& p, const FramedVector& n);

// ℓ = -2 E^∨ / q(E): the class of a curve ruling E. Requires q(E) < 0.
FramedVector ruling_curve_class(const Lattice& lattice, const IntVector& e);
// λ > 0 with E = λ · (primal lift of ℓ); equals -q(E)/2.
Rational exceptional_duality_factor(const Lattice& lattice, const IntVector& e);

struct DenominatorAudit {
  Integer denominator_lcm;
  Integer support_determinant;  // |det| of the support Gram matrix (1 if empty)
  bool lcm_divides_determinant = false;
  Integer bound_argument;       // (4·|A|)^(ρ-1), ρ = lattice rank
  BoundValue factorial_bound;   // bound_argument!
  bool within_bound = false;
};

DenominatorAudit denominator_audit(const ConeContext& ctx, const ZariskiDecomposition& dec,
                                   const Integer& card_a,
                                   std::uint64_t exact_threshold = kDefaultExactThreshold);

}  // namespace symplat
