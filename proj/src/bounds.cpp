#include "symplat/bounds.hpp"

#include "symplat/error.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace symplat {

namespace {

namespace mp = boost::multiprecision;

const Decimal& ln10() {
  static const Decimal value = mp::log(Decimal(10));
  return value;
}

// Arguments whose decimal length exceeds this are never materialized as
// integers; the logarithmic path works from log(m) directly.
constexpr double kMaxArgumentDigits = 1e4;

struct FactorialArgument {
  std::optional<Integer> exact;  // set when small enough to materialize
  Decimal value;                 // m as a decimal
  Decimal ln_value;              // ln m (m ≥ 1)
};

FactorialArgument power_argument(const Integer& base, std::uint64_t exponent) {
  FactorialArgument arg;
  const double digits = static_cast<double>(exponent) * log10_of(base).convert_to<double>();
  arg.ln_value = Decimal(exponent) * mp::log(Decimal(base.str()));
  if (digits < kMaxArgumentDigits) {
    Integer m(1);
    mpz_pow_ui(m.backend().data(), base.backend().data(), exponent);
    arg.exact = m;
    arg.value = Decimal(m.str());
  } else {
    arg.value = mp::exp(arg.ln_value);
    if (!mp::isfinite(arg.value)) {
      throw Error(ErrorCode::bound_overflow,
                  "factorial argument exceeds the representable logarithmic range");
    }
  }
  return arg;
}

// Stirling series for ln(m!) with four correction terms; the remainder is
// bounded by the first omitted term, 1/(1188 m⁹).
struct LogValue {
  Decimal value;
  Decimal abs_error;
};

LogValue ln_factorial_stirling(const Decimal& m, const Decimal& ln_m) {
  static const Decimal two_pi = 2 * mp::acos(Decimal(-1));
  const Decimal inv = 1 / m;
  const Decimal inv2 = inv * inv;
  Decimal series = inv / 12;
  Decimal term = inv * inv2;
  series -= term / 360;
  term *= inv2;
  series += term / 1260;
  term *= inv2;
  series -= term / 1680;
  term *= inv2;
  const Decimal remainder = term / 1188;
  const Decimal main = m * ln_m - m + (mp::log(two_pi) + ln_m) / 2;
  // 50-digit arithmetic contributes well below 1e-40 relative.
  const Decimal rounding = mp::abs(main) * Decimal("1e-40");
  return {main + series, remainder + rounding};
}

void check_error(const BoundValue& b) {
  if (b.relative_error > kLogRelativeError) {
    throw Error(ErrorCode::bound_overflow, "logarithmic bound lost its accuracy guarantee");
  }
}

BoundValue log_factorial(const FactorialArgument& arg) {
  BoundValue b;
  b.kind = BoundValue::Kind::logarithmic;
  if (arg.exact && *arg.exact <= 1) {
    b.log10_value = Decimal(0);
    return b;
  }
  if (arg.exact && *arg.exact < 1000) {
    Integer f;
    mpz_fac_ui(f.backend().data(), arg.exact->convert_to<unsigned long>());
    b.log10_value = log10_of(f);
    b.relative_error = 1e-40;
    return b;
  }
  const LogValue ln = ln_factorial_stirling(arg.value, arg.ln_value);
  b.log10_value = ln.value / ln10();
  b.relative_error = (ln.abs_error / ln.value).convert_to<double>();
  check_error(b);
  return b;
}

BoundValue scaled_factorial(const Integer& prefactor, const FactorialArgument& arg,
                            std::uint64_t exact_threshold) {
  if (arg.exact && *arg.exact <= Integer(exact_threshold)) {
    Integer f;
    mpz_fac_ui(f.backend().data(), arg.exact->convert_to<unsigned long>());
    BoundValue b;
    b.exact_value = prefactor * f;
    return b;
  }
  BoundValue b = log_factorial(arg);
  const Decimal factorial_log = *b.log10_value;
  const Decimal prefactor_log = log10_of(prefactor);
  const Decimal abs_error =
      factorial_log * Decimal(b.relative_error) + prefactor_log * Decimal("1e-40");
  b.log10_value = factorial_log + prefactor_log;
  b.relative_error =
      abs_error == 0 ? 0.0 : (abs_error / *b.log10_value).convert_to<double>();
  check_error(b);
  return b;
}

}  // namespace

Decimal BoundValue::log10() const {
  if (kind == Kind::exact) return log10_of(*exact_value);
  return *log10_value;
}

Decimal log10_of(const Integer& x) {
  if (x <= 0) throw Error(ErrorCode::invalid_argument, "log10 of a nonpositive integer");
  const std::size_t bits = mpz_sizeinbase(x.backend().data(), 2);
  if (bits <= 160) return mp::log10(Decimal(x.str()));
  const std::size_t shift = bits - 160;
  Integer top;
  mpz_tdiv_q_2exp(top.backend().data(), x.backend().data(), shift);
  return mp::log10(Decimal(top.str())) + Decimal(shift) * mp::log10(Decimal(2));
}

BoundValue factorial_or_log(const Integer& m, std::uint64_t exact_threshold) {
  if (m < 0) throw Error(ErrorCode::invalid_argument, "factorial of a negative integer");
  FactorialArgument arg;
  if (m.str().size() < kMaxArgumentDigits) {
    arg.exact = m;
    arg.value = Decimal(m.str());
    arg.ln_value = m > 0 ? Decimal(mp::log(arg.value)) : Decimal(0);
  } else {
    arg.value = Decimal(m.str());
    arg.ln_value = log10_of(m) * ln10();
  }
  return scaled_factorial(Integer(1), arg, exact_threshold);
}

BoundValue birationality_bound(const BoundQuery& query, std::uint64_t exact_threshold) {
  if (query.n < 1 || query.card_a < 1 || query.rho < 1) {
    throw Error(ErrorCode::invalid_argument, "bound query needs n, |A|, rho ≥ 1");
  }
  const Integer n(query.n);
  const Integer prefactor = (n + 1) * (2 * n + 3);
  return scaled_factorial(prefactor, power_argument(4 * query.card_a, query.rho - 1),
                          exact_threshold);
}

Integer moduli_dimension(long a, long k, int eps) {
  if (a < 1 || k < 1 || (eps != 1 && eps != -1)) {
    throw Error(ErrorCode::invalid_argument, "moduli data needs a, k ≥ 1 and eps = ±1");
  }
  const Integer dim = 2 * Integer(a) * Integer(a) * Integer(k) + 2 * eps;
  if (dim <= 0) {
    throw Error(ErrorCode::degenerate_moduli, "moduli space has nonpositive dimension");
  }
  return dim;
}

BoundValue moduli_bound(long a, long k, int eps, std::uint64_t rho,
                        std::uint64_t exact_threshold) {
  if (rho < 1) throw Error(ErrorCode::invalid_argument, "rho must be ≥ 1");
  const Integer dim = moduli_dimension(a, k, eps);
  const Integer prefactor = (dim + 2) * (dim + 3) / 2;
  return scaled_factorial(prefactor, power_argument(8 * Integer(k), rho - 1), exact_threshold);
}

bool bound_admits(const BoundValue& value, const Integer& x) {
  if (value.is_exact()) return x <= *value.exact_value;
  if (x <= 1) return true;
  const Decimal lower = *value.log10_value * (1 - Decimal(value.relative_error));
  return log10_of(x) <= lower;
}

std::string format_decimal(const Decimal& d) {
  std::ostringstream out;
  if (mp::abs(d) < Decimal("1e15")) {
    out << std::fixed << std::setprecision(10) << d;
  } else {
    out << std::scientific << std::setprecision(19) << d;
  }
  return out.str();
}

}  // namespace symplat
