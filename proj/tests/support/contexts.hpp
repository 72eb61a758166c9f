#pragma once

// Random cone contexts and a box-search oracle for negative classes.

#include "symplat/cones.hpp"
#include "support/random.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <optional>

namespace symplat::testing {

inline IntVector random_positive_class(Rng& rng, const Lattice& l) {
  for (int attempt = 0; attempt < 2000; ++attempt) {
    const IntVector h = rng.int_vector(l.rank(), -3, 3);
    if (q_eval(l, h, h) > 0) return h;
  }
  return IntVector();
}

// Random valid context: signature (1, rank-1), up to max_primes primes with
// pairwise nonnegative pairing, no walls or generators.
inline ConeContext random_context(Rng& rng, Index rank, int max_primes, long prime_box = 2) {
  for (;;) {
    const Lattice l = rng.hyperbolic_lattice(rank);
    const IntVector h = random_positive_class(rng, l);
    if (h.size() == 0) continue;
    std::vector<IntVector> primes;
    const int want = max_primes == 0 ? 0 : static_cast<int>(rng.uniform(1, max_primes));
    for (int attempt = 0; attempt < 200 && static_cast<int>(primes.size()) < want; ++attempt) {
      const IntVector e = rng.int_vector(rank, -prime_box, prime_box);
      if (q_eval(l, e, e) >= 0) continue;
      bool ok = true;
      for (const auto& f : primes) {
        if (f == e || q_eval(l, e, f) < 0) ok = false;
      }
      if (ok) primes.push_back(e);
    }
    return ConeContext(l, h, primes, {}, {});
  }
}

// Context whose generators are reflections in roots with integral
// reflections.
inline ConeContext random_reflection_context(Rng& rng, Index rank) {
  for (;;) {
    const Lattice l = rng.hyperbolic_lattice(rank);
    const IntVector h = random_positive_class(rng, l);
    if (h.size() == 0) continue;
    std::vector<IntMatrix> gens;
    for (int attempt = 0; attempt < 100 && gens.size() < 2; ++attempt) {
      const IntVector e = rng.int_vector(rank, -2, 2);
      if (q_eval(l, e, e) >= 0 || !is_integral_reflection(l, e)) continue;
      gens.push_back(reflection_matrix(l, e));
    }
    if (gens.empty()) continue;
    return ConeContext(l, h, {}, {}, gens);
  }
}

// U ⊕ ⟨-2⟩ with one Eichler transvection (infinite order).
inline ConeContext parabolic_context() {
  const Lattice l = direct_sum(lattices::hyperbolic_plane(), lattices::diagonal({-2}));
  const IntVector e = make_int_vector({1, 0, 0});
  const IntVector w = make_int_vector({0, 0, 1});
  IntMatrix t(3, 3);
  for (Index j = 0; j < 3; ++j) {
    const IntVector x = IntVector::Unit(3, j);
    const Integer xe = q_eval(l, x, e);
    const Integer xw = q_eval(l, x, w);
    t.col(j) = x - xe * w + xw * e + xe * e;
  }
  return ConeContext(l, make_int_vector({1, 1, 0}), {}, {}, {t});
}

// Box search for integral x with q(x,x) = square, 0 < q(x,h) ≤ pairing_max.
// The box radius comes from the smallest eigenvalue of the floating-point
// majorant; nullopt if the box would be too large to search.
inline std::optional<std::vector<IntVector>> box_negative_classes_checked(
    const ConeContext& ctx, const Integer& square, const Integer& pairing_max,
    bool primitive_only, long max_radius = 40) {
  const Lattice& l = ctx.lattice();
  const Index n = l.rank();
  Eigen::MatrixXd g(n, n);
  Eigen::VectorXd hv(n);
  for (Index i = 0; i < n; ++i) {
    hv(i) = ctx.h()(i).convert_to<double>();
    for (Index j = 0; j < n; ++j) g(i, j) = l.gram()(i, j).convert_to<double>();
  }
  const double hh = hv.dot(g * hv);
  const Eigen::VectorXd gh = g * hv;
  const Eigen::MatrixXd maj = 2.0 / hh * gh * gh.transpose() - g;
  const double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(maj).eigenvalues().minCoeff();
  const double t = pairing_max.convert_to<double>();
  const double bound = 2 * t * t / hh - square.convert_to<double>();
  const long radius = static_cast<long>(std::floor(std::sqrt(bound / lmin) * 1.001)) + 1;
  if (radius > max_radius) return std::nullopt;

  std::vector<long long> gram(n * n);
  std::vector<long long> h(n);
  for (Index i = 0; i < n; ++i) {
    h[i] = ctx.h()(i).convert_to<long long>();
    for (Index j = 0; j < n; ++j) gram[i * n + j] = l.gram()(i, j).convert_to<long long>();
  }
  const long long s = square.convert_to<long long>();
  const long long pm = pairing_max.convert_to<long long>();

  std::vector<IntVector> out;
  std::vector<long long> x(n, -radius);
  for (;;) {
    long long qxx = 0, qxh = 0;
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        qxx += x[i] * gram[i * n + j] * x[j];
        qxh += x[i] * gram[i * n + j] * h[j];
      }
    }
    if (qxx == s && qxh > 0 && qxh <= pm) {
      IntVector v(n);
      for (Index i = 0; i < n; ++i) v(i) = x[i];
      if (!primitive_only || content(v) == 1) out.push_back(v);
    }
    Index k = 0;
    while (k < n && x[k] == radius) x[k++] = -radius;
    if (k == n) break;
    ++x[k];
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

inline std::vector<IntVector> box_negative_classes(const ConeContext& ctx, const Integer& square,
                                                   const Integer& pairing_max,
                                                   bool primitive_only) {
  auto r = box_negative_classes_checked(ctx, square, pairing_max, primitive_only, 200);
  return r ? *r : std::vector<IntVector>{};
}

}  // namespace symplat::testing
