#include "symplat/bounds.hpp"
#include "symplat/error.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace symplat {
namespace {

namespace oracle = testing::oracle;

// Product loop, independent of the GMP factorial used by the library.
Integer slow_factorial(unsigned long m) {
  Integer f(1);
  for (unsigned long i = 2; i <= m; ++i) f *= i;
  return f;
}

Integer exact(const BoundValue& b) {
  EXPECT_TRUE(b.is_exact());
  return b.exact_value.value_or(Integer(-1));
}

TEST(Bounds, FactorialExamples) {
  EXPECT_EQ(exact(factorial_or_log(5, 100)), 120);
  EXPECT_EQ(exact(factorial_or_log(0, 100)), 1);
  for (unsigned long m = 0; m < 60; ++m) EXPECT_EQ(exact(factorial_or_log(m, 100)), slow_factorial(m));

  const auto big = factorial_or_log(10000, 1000);
  ASSERT_FALSE(big.is_exact());
  const long double expected = oracle::log10_factorial_sum(10000);
  const double got = big.log10_value->convert_to<double>();
  EXPECT_LE(std::fabs(got - static_cast<double>(expected)) / static_cast<double>(expected), 1e-9);
  EXPECT_EQ(format_decimal(*big.log10_value).substr(0, 10), "35659.4542");
  // 10⁴! has 35660 digits.
  EXPECT_EQ(slow_factorial(10000).str().size(), 35660u);
  EXPECT_LE(big.relative_error, kLogRelativeError);
}

TEST(Bounds, SmallArgumentsOnTheLogPath) {
  for (unsigned long m : {0ul, 1ul, 2ul, 7ul, 150ul, 999ul, 1000ul, 1001ul, 4000ul}) {
    const auto b = factorial_or_log(m, 0);
    if (m == 0) {
      EXPECT_TRUE(b.is_exact());
      continue;
    }
    ASSERT_FALSE(b.is_exact()) << m;
    const double expected = static_cast<double>(oracle::log10_factorial_sum(m));
    const double got = b.log10_value->convert_to<double>();
    if (expected == 0) {
      EXPECT_EQ(got, 0);
    } else {
      EXPECT_LE(std::fabs(got - expected) / expected, 1e-12) << m;
    }
  }
}

TEST(Bounds, LogPathAgreesWithExactNearThreshold) {
  for (unsigned long m : {2000ul, 2001ul, 5000ul}) {
    const auto e = factorial_or_log(m, m);
    const auto l = factorial_or_log(m, m - 1);
    ASSERT_TRUE(e.is_exact());
    ASSERT_FALSE(l.is_exact());
    const Decimal diff = abs(e.log10() - *l.log10_value);
    EXPECT_LE(diff.convert_to<double>(), l.relative_error * l.log10_value->convert_to<double>() + 1e-30);
  }
}

TEST(Bounds, BirationalityExamples) {
  EXPECT_EQ(exact(birationality_bound({1, 1, 1})), 10);
  EXPECT_EQ(exact(birationality_bound({1, 1, 2})), 240);
  EXPECT_EQ(exact(birationality_bound({2, 2, 2})), 846720);
  EXPECT_EQ(exact(birationality_bound({3, 1, 2})), Integer(4 * 9) * slow_factorial(4));
  EXPECT_THROW(birationality_bound({0, 1, 1}), Error);
}

TEST(Bounds, LogarithmicBirationality) {
  // (4·5)^2 = 400 > threshold 100: 10 · 400!.
  const auto b = birationality_bound({1, 5, 3}, 100);
  ASSERT_FALSE(b.is_exact());
  const double expected = 1 + static_cast<double>(oracle::log10_factorial_sum(400));
  EXPECT_LE(std::fabs(b.log10_value->convert_to<double>() - expected) / expected, 1e-12);

  // Astronomically large argument: (4·10)^40 ≈ 1.2e64.
  const auto huge = birationality_bound({2, 10, 41});
  ASSERT_FALSE(huge.is_exact());
  EXPECT_LE(huge.relative_error, kLogRelativeError);
  // log10(m!) ≈ m·(log10 m - 1/ln 10) with m = 40^40.
  const double m = std::pow(40.0, 40.0);
  const double approx = m * (std::log10(m) - 1 / std::log(10.0));
  EXPECT_NEAR(huge.log10_value->convert_to<double>() / approx, 1.0, 1e-9);
}

TEST(Bounds, ModuliExamples) {
  EXPECT_EQ(moduli_dimension(1, 1, 1), 4);
  EXPECT_EQ(moduli_dimension(1, 2, -1), 2);
  EXPECT_EQ(moduli_dimension(2, 1, 1), 10);
  try {
    moduli_dimension(1, 1, -1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::degenerate_moduli);
  }
  EXPECT_EQ(exact(moduli_bound(1, 1, 1, 1)), 21);
  EXPECT_EQ(exact(moduli_bound(1, 1, 1, 2)), 846720);
  EXPECT_EQ(exact(moduli_bound(2, 1, 1, 1)), 78);
}

TEST(Bounds, ModuliBoundIsBirationalityBoundWithCyclicDiscriminant) {
  for (long a = 1; a <= 3; ++a) {
    for (long k = 1; k <= 3; ++k) {
      for (int eps : {1, -1}) {
        for (std::uint64_t rho = 1; rho <= 3; ++rho) {
          Integer dim;
          try {
            dim = moduli_dimension(a, k, eps);
          } catch (const Error&) {
            continue;
          }
          const auto lhs = moduli_bound(a, k, eps, rho);
          const auto rhs = birationality_bound({(dim / 2).convert_to<std::uint64_t>(), 2 * k, rho});
          ASSERT_EQ(lhs.is_exact(), rhs.is_exact());
          if (lhs.is_exact()) {
            EXPECT_EQ(*lhs.exact_value, *rhs.exact_value);
          } else {
            EXPECT_EQ(*lhs.log10_value, *rhs.log10_value);
          }
        }
      }
    }
  }
}

TEST(Bounds, Monotonicity) {
  const std::uint64_t threshold = 50;
  const auto log_of = [&](std::uint64_t n, long card, std::uint64_t rho) {
    return birationality_bound({n, card, rho}, threshold).log10();
  };
  for (std::uint64_t n = 1; n <= 4; ++n) {
    for (long card = 1; card <= 4; ++card) {
      for (std::uint64_t rho = 1; rho <= 3; ++rho) {
        EXPECT_LT(log_of(n, card, rho), log_of(n + 1, card, rho));
        EXPECT_LT(log_of(n, card, rho), log_of(n, card, rho + 1));
        if (rho >= 2) EXPECT_LT(log_of(n, card, rho), log_of(n, card + 1, rho));
      }
    }
  }
}

TEST(Bounds, AdmitsIsExactOrCertified) {
  const auto b = birationality_bound({1, 1, 2});
  EXPECT_TRUE(bound_admits(b, 240));
  EXPECT_FALSE(bound_admits(b, 241));
  const auto l = factorial_or_log(24, 0);
  EXPECT_TRUE(bound_admits(l, 4));
  // 24! = 620448401733239439360000; equality itself is not certifiable.
  EXPECT_TRUE(bound_admits(l, Integer("62044840173323943936000")));
  EXPECT_FALSE(bound_admits(l, Integer("620448401733239439360001")));
}

}  // namespace
}  // namespace symplat
