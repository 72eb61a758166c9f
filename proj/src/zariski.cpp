#include "symplat/zariski.hpp"

#include "symplat/error.hpp"
#include "symplat/exact_linalg.hpp"

#include <algorithm>
#include <optional>

namespace symplat {

namespace {

IntMatrix support_gram(const Lattice& lattice, std::span<const IntVector> primes,
                       const std::vector<std::size_t>& support) {
  const Index k = static_cast<Index>(support.size());
  IntMatrix g(k, k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) {
      g(i, j) = q_eval(lattice, primes[support[i]], primes[support[j]]);
    }
  }
  return g;
}

// Solves Σ_i a_i q(E_i, E_j) = rhs_j over the support by fraction-free
// elimination after clearing the denominators of rhs. Empty when singular.
std::optional<std::vector<Rational>> solve_support(const IntMatrix& gram, const std::vector<Rational>& rhs) {
  Integer scale(1);
  for (const auto& r : rhs) scale = lcm(scale, denominator(r));
  IntVector b(static_cast<Index>(rhs.size()));
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    b(static_cast<Index>(i)) = numerator(Rational(rhs[i] * Rational(scale)));
  }
  const auto sol = fraction_free_solve<Integer>(gram, b);
  if (sol.singular) return std::nullopt;
  std::vector<Rational> a;
  a.reserve(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    a.emplace_back(sol.numerators(static_cast<Index>(i)), sol.denominator * scale);
  }
  return a;
}

RatVector combination(std::span<const IntVector> primes, const std::vector<std::size_t>& support,
                      const std::vector<Rational>& coefficients, Index rank) {
  RatVector n = RatVector::Zero(rank);
  for (std::size_t i = 0; i < support.size(); ++i) {
    n += coefficients[i] * to_rational(primes[support[i]]);
  }
  return n;
}

const RatVector& primal_of_rank(const Lattice& lattice, const FramedVector& v, const char* what) {
  if (v.frame() != Frame::primal) {
    throw Error(ErrorCode::frame_mismatch, std::string(what) + " must be a primal vector");
  }
  if (v.size() != lattice.rank()) {
    throw Error(ErrorCode::length_mismatch, std::string(what) + " has the wrong length");
  }
  return v.coords();
}

}  // namespace

ZariskiDecomposition zariski_decompose(const ConeContext& ctx, const FramedVector& d) {
  const Lattice& lattice = ctx.lattice();
  const RatVector& divisor = primal_of_rank(lattice, d, "divisor");
  const auto& primes = ctx.primes();

  std::vector<Rational> d_pairing;
  d_pairing.reserve(primes.size());
  for (const auto& e : primes) d_pairing.push_back(q_eval(lattice, divisor, to_rational(e)));

  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (d_pairing[i] < 0) support.push_back(i);
  }

  std::vector<Rational> coefficients;
  RatVector positive = divisor;
  while (!support.empty()) {
    const IntMatrix gram = support_gram(lattice, primes, support);
    if (!is_negative_definite<Integer>(gram)) {
      throw Error(ErrorCode::not_pseudo_effective,
                  "not pseudo-effective relative to supplied primes: support Gram matrix is "
                  "not negative definite");
    }
    std::vector<Rational> rhs;
    for (std::size_t j : support) rhs.push_back(d_pairing[j]);
    coefficients = *solve_support(gram, rhs);  // definite, hence nonsingular
    for (const auto& a : coefficients) {
      if (a < 0) {
        throw Error(ErrorCode::inconsistent_prime_set,
                    "inconsistent prime set: negative coefficient in the negative part");
      }
    }
    positive = divisor - combination(primes, support, coefficients, lattice.rank());

    std::vector<std::size_t> added;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (std::binary_search(support.begin(), support.end(), i)) continue;
      if (q_eval(lattice, positive, to_rational(primes[i])) < 0) added.push_back(i);
    }
    if (added.empty()) break;
    support.insert(support.end(), added.begin(), added.end());
    std::sort(support.begin(), support.end());
  }

  ZariskiDecomposition dec{FramedVector::primal(positive),
                           FramedVector::primal(RatVector(divisor - positive)), {}, {}, Integer(1)};
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (coefficients[i] == 0) continue;
    dec.support.push_back(support[i]);
    dec.coefficients.push_back(coefficients[i]);
    dec.denominator_lcm = lcm(dec.denominator_lcm, denominator(coefficients[i]));
  }
  return dec;
}

VerificationReport verify_decomposition(const Lattice& lattice, std::span<const IntVector> primes,
                                        const FramedVector& d, const FramedVector& p,
                                        const FramedVector& n) {
  const RatVector& dv = primal_of_rank(lattice, d, "divisor");
  const RatVector& pv = primal_of_rank(lattice, p, "positive part");
  const RatVector& nv = primal_of_rank(lattice, n, "negative part");

  VerificationReport report;
  report.sums_to_divisor = RatVector(pv + nv) == dv;
  report.nef = std::all_of(primes.begin(), primes.end(), [&](const IntVector& e) {
    return q_eval(lattice, pv, to_rational(e)) >= 0;
  });
  report.orthogonal = q_eval(lattice, pv, nv) == 0;

  bool zero = true;
  for (Index i = 0; i < nv.size(); ++i) zero = zero && nv(i) == 0;
  if (zero) {
    report.exceptional = true;
    return report;
  }

  // A subset with negative definite Gram matrix is linearly independent, so
  // the coefficients are pinned down by the pairings with its members.
  const std::size_t count = primes.size();
  if (count >= 8 * sizeof(unsigned long) - 1) {
    throw Error(ErrorCode::invalid_argument, "too many primes for support search");
  }
  for (unsigned long mask = 1; mask < (1ul << count); ++mask) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < count; ++i) {
      if (mask & (1ul << i)) support.push_back(i);
    }
    std::vector<Rational> rhs;
    for (std::size_t j : support) rhs.push_back(q_eval(lattice, nv, to_rational(primes[j])));
    const IntMatrix gram = support_gram(lattice, primes, support);
    const auto solved = solve_support(gram, rhs);
    if (!solved) continue;
    const auto& a = *solved;
    if (!std::all_of(a.begin(), a.end(), [](const Rational& x) { return x > 0; })) continue;
    if (combination(primes, support, a, lattice.rank()) != nv) continue;
    report.support = support;
    report.coefficients = a;
    if (is_negative_definite<Integer>(gram)) {
      report.exceptional = true;
      return report;
    }
  }
  return report;
}

VerificationReport verify_decomposition(const ConeContext& ctx, const FramedVector& d,
                                        const FramedVector& p, const FramedVector& n) {
  return verify_decomposition(ctx.lattice(), ctx.primes(), d, p, n);
}

Rational exceptional_duality_factor(const Lattice& lattice, const IntVector& e) {
  const Integer ee = q_eval(lattice, e, e);
  if (ee >= 0) throw Error(ErrorCode::nonnegative_root, "ruling curves need q(E) < 0");
  return Rational(-ee, 2);
}

FramedVector ruling_curve_class(const Lattice& lattice, const IntVector& e) {
  const Integer ee = q_eval(lattice, e, e);
  if (ee >= 0) throw Error(ErrorCode::nonnegative_root, "ruling curves need q(E) < 0");
  const Rational scale(-2, ee);
  return FramedVector::dual(RatVector(scale * dual_class(lattice, FramedVector::primal(e)).coords()));
}

DenominatorAudit denominator_audit(const ConeContext& ctx, const ZariskiDecomposition& dec,
                                   const Integer& card_a, std::uint64_t exact_threshold) {
  if (card_a < 1) throw Error(ErrorCode::invalid_argument, "|A| must be positive");
  DenominatorAudit audit;
  audit.denominator_lcm = dec.denominator_lcm;
  audit.support_determinant =
      abs(bareiss_determinant<Integer>(support_gram(ctx.lattice(), ctx.primes(), dec.support)));
  audit.lcm_divides_determinant = audit.support_determinant % audit.denominator_lcm == 0;

  const auto rank = static_cast<unsigned long>(ctx.lattice().rank());
  Integer base = 4 * card_a;
  Integer argument(1);
  mpz_pow_ui(argument.backend().data(), base.backend().data(), rank - 1);
  audit.bound_argument = argument;
  audit.factorial_bound = factorial_or_log(argument, exact_threshold);
  audit.within_bound = bound_admits(audit.factorial_bound, audit.denominator_lcm);
  return audit;
}

}  // namespace symplat
