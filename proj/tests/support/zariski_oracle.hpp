#pragma once

// Brute-force Zariski decomposition: try every subset of primes as the
// support, keep the subsets satisfying all defining conditions.

#include "support/oracles.hpp"

#include "symplat/cones.hpp"

#include <vector>

namespace symplat::testing::oracle {

struct SubsetDecomposition {
  std::vector<std::size_t> support;
  std::vector<Rational> coefficients;
  RatVector positive;
  RatVector negative;
};

inline Rational pair(const Lattice& l, const RatVector& x, const RatVector& y) {
  Rational s(0);
  for (Index i = 0; i < l.rank(); ++i)
    for (Index j = 0; j < l.rank(); ++j) s += x(i) * Rational(l.gram()(i, j)) * y(j);
  return s;
}

inline std::vector<SubsetDecomposition> all_subset_decompositions(const ConeContext& ctx,
                                                                  const RatVector& d) {
  const Lattice& l = ctx.lattice();
  const auto& primes = ctx.primes();
  const std::size_t count = primes.size();
  std::vector<SubsetDecomposition> valid;
  for (unsigned long mask = 0; mask < (1ul << count); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < count; ++i)
      if (mask & (1ul << i)) s.push_back(i);
    const Index k = static_cast<Index>(s.size());
    RatMatrix g(k, k);
    RatVector rhs(k);
    for (Index i = 0; i < k; ++i) {
      rhs(i) = pair(l, d, primes[s[i]].cast<Rational>());
      for (Index j = 0; j < k; ++j) {
        g(i, j) = pair(l, primes[s[i]].cast<Rational>(), primes[s[j]].cast<Rational>());
      }
    }
    if (!ldl_negative_definite(g)) continue;
    const auto a = rational_solve(g, rhs);
    if (!a) continue;
    bool positive = true;
    for (Index i = 0; i < k; ++i) positive = positive && (*a)(i) > 0;
    if (!positive) continue;
    RatVector n = RatVector::Zero(l.rank());
    for (Index i = 0; i < k; ++i) n += (*a)(i) * primes[s[i]].cast<Rational>();
    const RatVector p = d - n;
    bool nef = true;
    for (const auto& e : primes) nef = nef && pair(l, p, e.cast<Rational>()) >= 0;
    if (!nef || pair(l, p, n) != 0) continue;
    std::vector<Rational> coeffs(a->data(), a->data() + k);
    valid.push_back({s, coeffs, p, n});
  }
  return valid;
}

}  // namespace symplat::testing::oracle
