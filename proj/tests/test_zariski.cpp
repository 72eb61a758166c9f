#include "symplat/error.hpp"
#include "symplat/zariski.hpp"
#include "support/contexts.hpp"
#include "support/zariski_oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <optional>

namespace symplat {
namespace {

using testing::Rng;

IntVector v(std::initializer_list<long> x) { return make_int_vector(x); }
FramedVector p(std::initializer_list<long> x) { return FramedVector::primal(make_int_vector(x)); }

TEST(Zariski, Examples) {
  const auto ctx = make_cone_context(lattices::diagonal({2, -2}), v({1, 0}), {v({0, 1})}, {}, {});
  const auto a = zariski_decompose(ctx, p({1, 2}));
  EXPECT_EQ(a.positive, p({1, 0}));
  EXPECT_EQ(a.negative, p({0, 2}));
  EXPECT_EQ(a.support, (std::vector<std::size_t>{0}));
  EXPECT_EQ(a.coefficients, (std::vector<Rational>{2}));
  EXPECT_EQ(a.denominator_lcm, 1);

  const auto b = zariski_decompose(ctx, p({1, 0}));
  EXPECT_EQ(b.positive, p({1, 0}));
  EXPECT_EQ(b.negative, p({0, 0}));
  EXPECT_TRUE(b.support.empty());

  // a = q(D, E) / q(E) = -3 / -4.
  const auto skew = make_cone_context(make_lattice(make_int_matrix({{2, 1}, {1, -4}})), v({1, 0}),
                                      {v({0, 1})}, {}, {});
  const auto c = zariski_decompose(skew, p({1, 1}));
  EXPECT_EQ(c.positive, FramedVector::primal(make_rat_vector({1, Rational(1, 4)})));
  EXPECT_EQ(c.negative, FramedVector::primal(make_rat_vector({0, Rational(3, 4)})));
  EXPECT_EQ(c.coefficients, (std::vector<Rational>{Rational(3, 4)}));
  EXPECT_EQ(c.denominator_lcm, 4);
  EXPECT_EQ(q_eval(skew.lattice(), c.positive, FramedVector::primal(v({0, 1}))), 0);
}

TEST(Zariski, NotPseudoEffective) {
  // E1, E2 are (-2)-classes pairing to 3, so their Gram matrix is indefinite.
  const Lattice l = make_lattice(make_int_matrix({{-2, 3, 0}, {3, -2, 0}, {0, 0, -2}}));
  ASSERT_EQ(l.signature(), (Signature{1, 2}));
  const auto ctx = make_cone_context(l, v({1, 1, 0}), {v({1, 0, 0}), v({0, 1, 0})}, {}, {});
  try {
    zariski_decompose(ctx, p({-1, -1, 0}));
    FAIL() << "expected not_pseudo_effective";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_pseudo_effective);
  }
  EXPECT_TRUE(testing::oracle::all_subset_decompositions(ctx, make_rat_vector({-1, -1, 0})).empty());
}

TEST(Zariski, VerifyReports) {
  const auto ctx = make_cone_context(lattices::diagonal({2, -2}), v({1, 0}), {v({0, 1})}, {}, {});
  const auto ok = verify_decomposition(ctx, p({1, 2}), p({1, 0}), p({0, 2}));
  EXPECT_TRUE(ok.ok());
  EXPECT_EQ(ok.support, (std::vector<std::size_t>{0}));

  // q(P, E) = q((1,1),(0,1)) = -2.
  const auto bad = verify_decomposition(ctx, p({1, 2}), p({1, 1}), p({0, 1}));
  EXPECT_FALSE(bad.ok());
  EXPECT_FALSE(bad.nef);
  EXPECT_TRUE(bad.sums_to_divisor);

  const auto off = verify_decomposition(ctx, p({1, 2}), p({1, 1}), p({0, 2}));
  EXPECT_FALSE(off.sums_to_divisor);

  // Support Gram [[-2,-3],[-3,-2]] (leading minors -2, -5): not definite.
  const Lattice l = make_lattice(make_int_matrix({{2, 0, 0}, {0, -2, -3}, {0, -3, -2}}));
  const std::vector<IntVector> primes{v({0, 1, 0}), v({0, 0, 1})};
  const auto indefinite =
      verify_decomposition(l, primes, p({1, 1, 1}), p({1, 0, 0}), p({0, 1, 1}));
  EXPECT_FALSE(indefinite.exceptional);
  EXPECT_FALSE(indefinite.ok());
  EXPECT_EQ(indefinite.support, (std::vector<std::size_t>{0, 1}));

  EXPECT_THROW(verify_decomposition(ctx, p({1, 2}), FramedVector::dual(v({1, 0})), p({0, 2})), Error);
}

TEST(Zariski, RulingCurve) {
  EXPECT_EQ(ruling_curve_class(lattices::diagonal({-2}), v({1})), FramedVector::dual(v({-2})));
  EXPECT_EQ(ruling_curve_class(lattices::diagonal({-4}), v({1})), FramedVector::dual(v({-2})));
  EXPECT_EQ(ruling_curve_class(lattices::diagonal({2, -2}), v({0, 1})), FramedVector::dual(v({0, -2})));
  EXPECT_EQ(exceptional_duality_factor(lattices::diagonal({-4}), v({1})), 2);
  EXPECT_THROW(ruling_curve_class(lattices::diagonal({2, -2}), v({1, 0})), Error);
}

TEST(Zariski, RulingCurveDuality) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Lattice l = rng.lattice(rng.uniform(1, 4));
    const IntVector e = rng.int_vector(l.rank(), -3, 3);
    if (q_eval(l, e, e) >= 0) continue;
    const auto ell = ruling_curve_class(l, e);
    const auto lift = primal_of_dual(l, ell);
    const Rational lambda = exceptional_duality_factor(l, e);
    EXPECT_GT(lambda, 0);
    EXPECT_EQ(RatVector(lambda * lift.coords()), to_rational(e));
    const Rational qe(q_eval(l, e, e));
    EXPECT_EQ(ell.coords(), RatVector(Rational(-2) / qe * dual_class(l, FramedVector::primal(e)).coords()));
    // ℓ · E = -2.
    EXPECT_EQ(ell.coords().dot(to_rational(e)), -2);
  }
}

TEST(Zariski, Audit) {
  const auto skew = make_cone_context(make_lattice(make_int_matrix({{2, 1}, {1, -4}})), v({1, 0}),
                                      {v({0, 1})}, {}, {});
  const auto dec = zariski_decompose(skew, p({1, 1}));
  const auto audit = denominator_audit(skew, dec, 1);
  EXPECT_EQ(audit.denominator_lcm, 4);
  EXPECT_EQ(audit.support_determinant, 4);
  EXPECT_TRUE(audit.lcm_divides_determinant);
  EXPECT_EQ(audit.bound_argument, 4);
  EXPECT_EQ(*audit.factorial_bound.exact_value, 24);
  EXPECT_TRUE(audit.within_bound);

  const auto ctx = make_cone_context(lattices::diagonal({2, -2}), v({1, 0}), {v({0, 1})}, {}, {});
  const auto integral = denominator_audit(ctx, zariski_decompose(ctx, p({1, 2})), 1);
  EXPECT_EQ(integral.denominator_lcm, 1);
  EXPECT_TRUE(integral.within_bound);
}

TEST(Zariski, MatchesSubsetOracleAndIsUnique) {
  Rng rng(32);
  int decomposed = 0, refused = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto ctx = testing::random_context(rng, rng.uniform(2, 4), 4);
    const RatVector d = to_rational(rng.int_vector(ctx.lattice().rank(), -5, 5));
    const auto expected = testing::oracle::all_subset_decompositions(ctx, d);
    ASSERT_LE(expected.size(), 1u) << "uniqueness";
    try {
      const auto dec = zariski_decompose(ctx, FramedVector::primal(d));
      ASSERT_EQ(expected.size(), 1u);
      EXPECT_EQ(dec.support, expected[0].support);
      EXPECT_EQ(dec.coefficients, expected[0].coefficients);
      EXPECT_EQ(dec.positive.coords(), expected[0].positive);
      EXPECT_TRUE(verify_decomposition(ctx, FramedVector::primal(d), dec.positive, dec.negative).ok());
      ++decomposed;
    } catch (const Error& e) {
      EXPECT_TRUE(expected.empty()) << e.what();
      ++refused;
    }
  }
  EXPECT_GT(decomposed, 100);
}

TEST(Zariski, IdempotentAndOrderIndependent) {
  Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ctx = testing::random_context(rng, rng.uniform(2, 4), 4);
    const auto d = FramedVector::primal(rng.int_vector(ctx.lattice().rank(), -5, 5));
    std::optional<ZariskiDecomposition> found;
    try {
      found = zariski_decompose(ctx, d);
    } catch (const Error&) {
      continue;
    }
    const ZariskiDecomposition& dec = *found;
    const auto again = zariski_decompose(ctx, dec.positive);
    EXPECT_EQ(again.positive, dec.positive);
    EXPECT_TRUE(again.support.empty());

    std::vector<std::size_t> perm(ctx.primes().size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    std::vector<IntVector> shuffled;
    for (auto i : perm) shuffled.push_back(ctx.primes()[i]);
    const ConeContext permuted(ctx.lattice(), ctx.h(), shuffled, {}, {});
    const auto other = zariski_decompose(permuted, d);
    EXPECT_EQ(other.positive, dec.positive);
    EXPECT_EQ(other.negative, dec.negative);
    EXPECT_EQ(other.denominator_lcm, dec.denominator_lcm);
    ASSERT_EQ(other.support.size(), dec.support.size());
    for (std::size_t i = 0; i < other.support.size(); ++i) {
      const auto original = perm[other.support[i]];
      const auto it = std::find(dec.support.begin(), dec.support.end(), original);
      ASSERT_NE(it, dec.support.end());
      EXPECT_EQ(other.coefficients[i], dec.coefficients[static_cast<std::size_t>(it - dec.support.begin())]);
    }
  }
}

TEST(Zariski, NegativePartStableUnderNefShift) {
  // Adding A with q(A, E) ≥ 0 for all primes and q(A, N) = 0 leaves N fixed
  // when no new prime enters the support.
  Rng rng(34);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 30; ++trial) {
    const auto ctx = testing::random_context(rng, rng.uniform(2, 4), 3);
    const auto d = FramedVector::primal(rng.int_vector(ctx.lattice().rank(), -5, 5));
    std::optional<ZariskiDecomposition> found;
    try {
      found = zariski_decompose(ctx, d);
    } catch (const Error&) {
      continue;
    }
    const ZariskiDecomposition& dec = *found;
    if (dec.support.empty()) continue;
    const RatVector a = dec.positive.coords() * Rational(rng.uniform(1, 3));
    const auto shifted = zariski_decompose(ctx, FramedVector::primal(RatVector(d.coords() + a)));
    if (shifted.support != dec.support) continue;
    EXPECT_EQ(shifted.negative, dec.negative);
    ++checked;
  }
  EXPECT_GT(checked, 5);
}

TEST(Zariski, DenominatorsDivideSupportDeterminant) {
  Rng rng(35);
  for (int trial = 0; trial < 150; ++trial) {
    const auto ctx = testing::random_context(rng, rng.uniform(2, 4), 4);
    const auto d = FramedVector::primal(rng.int_vector(ctx.lattice().rank(), -5, 5));
    try {
      const auto dec = zariski_decompose(ctx, d);
      const auto audit = denominator_audit(ctx, dec, 1);
      EXPECT_TRUE(audit.lcm_divides_determinant);
    } catch (const Error&) {
    }
  }
}

}  // namespace
}  // namespace symplat
