#pragma once

// Effective-birationality bounds
//   m ≥ ½(2n+2)(2n+3) · ((4·|A_X|)^(ρ-1))!
// and the moduli-space variant with |A_X| = 2k, evaluated exactly when the
// factorial argument is small and as a certified log10 otherwise.

#include "symplat/numeric.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace symplat {

using Decimal = boost::multiprecision::cpp_dec_float_50;

inline constexpr std::uint64_t kDefaultExactThreshold = 1'000'000;
// Advertised accuracy of every logarithmic BoundValue.
inline constexpr double kLogRelativeError = 1e-9;

struct BoundValue {
  enum class Kind { exact, logarithmic };

  Kind kind = Kind::exact;
  std::optional<Integer> exact_value;
  std::optional<Decimal> log10_value;
  // Certified bound on |computed - true| / true for log10_value; always at
  // most kLogRelativeError. Zero for exact values.
  double relative_error = 0;

  bool is_exact() const { return kind == Kind::exact; }
  // log10 of the value in either representation.
  Decimal log10() const;
};

struct BoundQuery {
  std::uint64_t n = 1;   // dim X = 2n
  Integer card_a{1};     // |A_X|
  std::uint64_t rho = 1; // Picard rank, or h^{1,1} for the family-wide bound
};

// m! exactly when m ≤ exact_threshold, else log10(m!) by the Stirling series
// with its remainder bound.
BoundValue factorial_or_log(const Integer& m, std::uint64_t exact_threshold);

BoundValue birationality_bound(const BoundQuery& query,
                               std::uint64_t exact_threshold = kDefaultExactThreshold);

// 2a²k + 2ε; ε = +1 for K3 surfaces, -1 for abelian ones.
Integer moduli_dimension(long a, long k, int eps);

// ½(dim+2)(dim+3) · ((8k)^(ρ-1))!
BoundValue moduli_bound(long a, long k, int eps, std::uint64_t rho,
                        std::uint64_t exact_threshold = kDefaultExactThreshold);

// log10 of a positive integer to ~45 significant digits.
Decimal log10_of(const Integer& x);

// x ≤ value, decided exactly for exact values; for logarithmic values true
// only when log10(x) is below the certified lower end of the bound.
bool bound_admits(const BoundValue& value, const Integer& x);

// Fixed notation with 10 decimals below 1e15, scientific with 20 significant
// digits above.
std::string format_decimal(const Decimal& d);

}  // namespace symplat
