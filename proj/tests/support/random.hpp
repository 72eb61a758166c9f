#pragma once

// Seeded generators for property tests.

#include "symplat/lattice.hpp"

#include <optional>
#include <random>

namespace symplat::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(engine_);
  }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64& engine() { return engine_; }

  IntVector int_vector(Index n, long lo, long hi) {
    IntVector v(n);
    for (Index i = 0; i < n; ++i) v(i) = uniform(lo, hi);
    return v;
  }

  RatVector rat_vector(Index n, long lo, long hi, long max_den) {
    RatVector v(n);
    for (Index i = 0; i < n; ++i) v(i) = Rational(uniform(lo, hi), uniform(1, max_den));
    return v;
  }

  IntMatrix symmetric(Index n, long lo, long hi) {
    IntMatrix m(n, n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = i; j < n; ++j) {
        m(i, j) = uniform(lo, hi);
        m(j, i) = m(i, j);
      }
    }
    return m;
  }

  // Product of random elementary matrices: determinant ±1.
  IntMatrix unimodular(Index n, int steps = 6) {
    IntMatrix u = IntMatrix::Identity(n, n);
    if (n < 2) {
      if (coin()) u = -u;
      return u;
    }
    for (int s = 0; s < steps; ++s) {
      const Index i = uniform(0, n - 1);
      Index j = uniform(0, n - 2);
      if (j >= i) ++j;
      switch (uniform(0, 2)) {
        case 0: u.row(i) += Integer(uniform(-2, 2)) * u.row(j); break;
        case 1: u.row(i).swap(u.row(j)); break;
        default: u.row(i) = -u.row(i); break;
      }
    }
    return u;
  }

  // Random nondegenerate lattice of the given rank.
  Lattice lattice(Index n, long lo = -4, long hi = 4) {
    for (;;) {
      try {
        return Lattice(symmetric(n, lo, hi));
      } catch (const Error&) {
      }
    }
  }

  // Random lattice of signature (1, n - 1).
  Lattice hyperbolic_lattice(Index n) {
    for (;;) {
      IntMatrix m = symmetric(n, -3, 3);
      m(0, 0) = uniform(1, 6);
      for (Index i = 1; i < n; ++i) m(i, i) = uniform(-6, -1);
      try {
        Lattice l(m);
        if (l.signature() == Signature{1, n - 1}) return l;
      } catch (const Error&) {
      }
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace symplat::testing
