#pragma once

// Cone membership, reflections, monodromy orbits and wall bookkeeping on a
// hyperbolic lattice (signature (1, rank - 1)).

#include "symplat/lattice.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace symplat {

class ConeContext {
 public:
  // Validates every invariant; see make_cone_context.
  ConeContext(Lattice lattice, IntVector h, std::vector<IntVector> primes,
              std::vector<IntVector> walls, std::vector<IntMatrix> monodromy_gens);

  const Lattice& lattice() const { return lattice_; }
  const IntVector& h() const { return h_; }
  const std::vector<IntVector>& primes() const { return primes_; }
  const std::vector<IntVector>& walls() const { return walls_; }
  const std::vector<IntMatrix>& monodromy_gens() const { return gens_; }
  // Generators followed by their inverses.
  const std::vector<IntMatrix>& monodromy_closure_gens() const { return closure_gens_; }

 private:
  Lattice lattice_;
  IntVector h_;
  std::vector<IntVector> primes_;
  std::vector<IntVector> walls_;
  std::vector<IntMatrix> gens_;
  std::vector<IntMatrix> closure_gens_;
};

// Errors: bad_signature, nonpositive_reference, prime_not_negative,
// prime_pairing_negative, wall_not_negative, non_isometric_generator,
// generator_swaps_components, length_mismatch.
ConeContext make_cone_context(Lattice lattice, IntVector h, std::vector<IntVector> primes,
                              std::vector<IntVector> walls,
                              std::vector<IntMatrix> monodromy_gens);

// q(x, x) > 0 and q(x, h) > 0.
bool in_positive_cone(const ConeContext& ctx, const FramedVector& x);
// Positive cone and q(x, E) > 0 for every prime E. Strict: boundary is out.
bool in_fe_chamber(const ConeContext& ctx, const FramedVector& x);

// x - (2 q(x, E) / q(E, E)) E. Throws degenerate_root when q(E, E) = 0.
FramedVector reflect(const Lattice& lattice, const FramedVector& root, const FramedVector& x);

// q(E, E) divides 2 q(b, E) for every basis vector b. Requires q(E, E) < 0.
bool is_integral_reflection(const Lattice& lattice, const IntVector& root);

// Integer matrix of the reflection in root (columns are images of the
// basis). Throws not_integral when the reflection is not integral.
IntMatrix reflection_matrix(const Lattice& lattice, const IntVector& root);

struct Orbit {
  std::vector<IntVector> elements;  // lexicographically sorted
  bool closed = true;
};

// Breadth-first closure of {D, -D} under the generators and their inverses.
// Growth stops once `budget` elements are held (the two seeds are always
// kept); closed is false when a further element was found at that point.
Orbit monodromy_orbit(const ConeContext& ctx, const IntVector& d, std::size_t budget);

// Every integral x with q(x, x) = square and 0 < q(x, h) ≤ pairing_max,
// lexicographically sorted.
std::vector<IntVector> enumerate_negative_classes(const ConeContext& ctx, const Integer& square,
                                                  const Integer& pairing_max,
                                                  bool primitive_only);

// Sign of q(x, w) for each wall w. Throws outside_positive_cone, or on_wall
// naming the first wall with q(x, w) = 0.
std::vector<int> chamber_signature(const ConeContext& ctx, const FramedVector& x);

enum class WallFailure { negativity, no_wall_match };

struct WallWitness {
  IntVector orbit_element;
  std::size_t wall_index = 0;
  Rational factor;  // orbit_element = factor · walls[wall_index], factor > 0
};

struct WallVerdict {
  bool is_wall = false;
  std::optional<WallWitness> witness;
  std::optional<WallFailure> failed_condition;
  // False when the orbit search hit its budget: a negative verdict is then
  // only relative to the explored part of the orbit.
  bool orbit_closed = true;
};

WallVerdict is_wall_divisor(const ConeContext& ctx, const IntVector& d, std::size_t budget);

}  // namespace symplat
