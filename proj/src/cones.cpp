#include "symplat/cones.hpp"

#include "symplat/error.hpp"
#include "symplat/short_vectors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace symplat {

namespace {

std::string index_text(std::size_t i) { return std::to_string(i); }

void require_rank(const Lattice& lattice, Index size, const std::string& what) {
  if (size != lattice.rank()) {
    throw Error(ErrorCode::length_mismatch,
                what + " has length " + std::to_string(size) + ", lattice rank is " +
                    std::to_string(lattice.rank()));
  }
}

const RatVector& primal_coords(const Lattice& lattice, const FramedVector& x) {
  if (x.frame() != Frame::primal) {
    throw Error(ErrorCode::frame_mismatch, "cone tests take primal vectors");
  }
  require_rank(lattice, x.size(), "vector");
  return x.coords();
}

Rational pairing(const Lattice& lattice, const RatVector& x, const IntVector& y) {
  return q_eval(lattice, x, to_rational(y));
}

// Inverse of an integral isometry g: gram⁻¹ gᵀ gram.
IntMatrix isometry_inverse(const Lattice& lattice, const IntMatrix& g) {
  const RatMatrix inv =
      lattice.inverse_gram() * to_rational(IntMatrix(g.transpose() * lattice.gram()));
  IntMatrix out(inv.rows(), inv.cols());
  for (Index i = 0; i < inv.rows(); ++i) {
    for (Index j = 0; j < inv.cols(); ++j) out(i, j) = numerator(inv(i, j));
  }
  return out;
}

}  // namespace

ConeContext::ConeContext(Lattice lattice, IntVector h, std::vector<IntVector> primes,
                         std::vector<IntVector> walls, std::vector<IntMatrix> monodromy_gens)
    : lattice_(std::move(lattice)),
      h_(std::move(h)),
      primes_(std::move(primes)),
      walls_(std::move(walls)),
      gens_(std::move(monodromy_gens)) {
  const Index n = lattice_.rank();
  if (lattice_.signature() != Signature{1, n - 1}) {
    throw Error(ErrorCode::bad_signature,
                "cone context needs signature (1, " + std::to_string(n - 1) + "), got (" +
                    std::to_string(lattice_.signature().positive) + ", " +
                    std::to_string(lattice_.signature().negative) + ")");
  }
  require_rank(lattice_, h_.size(), "h");
  if (q_eval(lattice_, h_, h_) <= 0) {
    throw Error(ErrorCode::nonpositive_reference, "reference class h must have q(h) > 0");
  }
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    require_rank(lattice_, primes_[i].size(), "prime " + index_text(i));
    if (q_eval(lattice_, primes_[i], primes_[i]) >= 0) {
      throw Error(ErrorCode::prime_not_negative,
                  "prime " + index_text(i) + " has nonnegative square");
    }
  }
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    for (std::size_t j = i + 1; j < primes_.size(); ++j) {
      if (q_eval(lattice_, primes_[i], primes_[j]) < 0) {
        throw Error(ErrorCode::prime_pairing_negative,
                    "primes " + index_text(i) + " and " + index_text(j) +
                        " pair negatively");
      }
    }
  }
  for (std::size_t i = 0; i < walls_.size(); ++i) {
    require_rank(lattice_, walls_[i].size(), "wall " + index_text(i));
    if (q_eval(lattice_, walls_[i], walls_[i]) >= 0) {
      throw Error(ErrorCode::wall_not_negative,
                  "wall " + index_text(i) + " has nonnegative square");
    }
  }
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const IntMatrix& g = gens_[i];
    if (g.rows() != n || g.cols() != n) {
      throw Error(ErrorCode::length_mismatch, "generator " + index_text(i) + " has wrong shape");
    }
    if (IntMatrix(g.transpose() * lattice_.gram() * g) != lattice_.gram()) {
      throw Error(ErrorCode::non_isometric_generator,
                  "generator " + index_text(i) + " is not an isometry");
    }
    if (q_eval(lattice_, IntVector(g * h_), h_) <= 0) {
      throw Error(ErrorCode::generator_swaps_components,
                  "generator " + index_text(i) + " swaps the components of the positive cone");
    }
  }
  closure_gens_ = gens_;
  for (const auto& g : gens_) closure_gens_.push_back(isometry_inverse(lattice_, g));
}

ConeContext make_cone_context(Lattice lattice, IntVector h, std::vector<IntVector> primes,
                              std::vector<IntVector> walls,
                              std::vector<IntMatrix> monodromy_gens) {
  return ConeContext(std::move(lattice), std::move(h), std::move(primes), std::move(walls),
                     std::move(monodromy_gens));
}

bool in_positive_cone(const ConeContext& ctx, const FramedVector& x) {
  const RatVector& v = primal_coords(ctx.lattice(), x);
  return q_eval(ctx.lattice(), v, v) > 0 && pairing(ctx.lattice(), v, ctx.h()) > 0;
}

bool in_fe_chamber(const ConeContext& ctx, const FramedVector& x) {
  if (!in_positive_cone(ctx, x)) return false;
  return std::all_of(ctx.primes().begin(), ctx.primes().end(), [&](const IntVector& e) {
    return pairing(ctx.lattice(), x.coords(), e) > 0;
  });
}

FramedVector reflect(const Lattice& lattice, const FramedVector& root, const FramedVector& x) {
  const RatVector& e = primal_coords(lattice, root);
  const RatVector& v = primal_coords(lattice, x);
  const Rational ee = q_eval(lattice, e, e);
  if (ee == 0) throw Error(ErrorCode::degenerate_root, "reflection root is isotropic");
  const Rational c = Rational(2) * q_eval(lattice, v, e) / ee;
  return FramedVector::primal(RatVector(v - c * e));
}

bool is_integral_reflection(const Lattice& lattice, const IntVector& root) {
  require_rank(lattice, root.size(), "root");
  const Integer ee = q_eval(lattice, root, root);
  if (ee >= 0) {
    throw Error(ErrorCode::nonnegative_root, "integral reflection test needs q(E, E) < 0");
  }
  const IntVector pairings = lattice.gram() * root;
  for (Index i = 0; i < pairings.size(); ++i) {
    if ((2 * pairings(i)) % ee != 0) return false;
  }
  return true;
}

IntMatrix reflection_matrix(const Lattice& lattice, const IntVector& root) {
  const Index n = lattice.rank();
  IntMatrix m(n, n);
  const auto e = FramedVector::primal(root);
  for (Index j = 0; j < n; ++j) {
    const auto image = reflect(lattice, e, FramedVector::primal(IntVector(IntVector::Unit(n, j))));
    m.col(j) = image.integral_coords();
  }
  return m;
}

Orbit monodromy_orbit(const ConeContext& ctx, const IntVector& d, std::size_t budget) {
  require_rank(ctx.lattice(), d.size(), "divisor");
  // Isometries are linear, so elements enter together with their negatives
  // and only one of each pair is expanded.
  std::set<IntVector, LexLess> seen;
  std::deque<IntVector> queue;
  Orbit orbit;
  seen.insert(d);
  seen.insert(IntVector(-d));
  queue.push_back(d);
  while (!queue.empty() && orbit.closed) {
    const IntVector v = queue.front();
    queue.pop_front();
    for (const auto& g : ctx.monodromy_closure_gens()) {
      IntVector image = g * v;
      if (seen.count(image)) continue;
      if (seen.size() + 2 > budget) {
        orbit.closed = false;
        break;
      }
      seen.insert(IntVector(-image));
      seen.insert(image);
      queue.push_back(std::move(image));
    }
  }
  orbit.elements.assign(seen.begin(), seen.end());
  return orbit;
}

std::vector<IntVector> enumerate_negative_classes(const ConeContext& ctx, const Integer& square,
                                                  const Integer& pairing_max,
                                                  bool primitive_only) {
  if (square >= 0) {
    throw Error(ErrorCode::invalid_argument, "enumeration needs a negative square");
  }
  std::vector<IntVector> found;
  if (pairing_max <= 0) return found;

  const Lattice& lattice = ctx.lattice();
  const Integer hh = q_eval(lattice, ctx.h(), ctx.h());
  const RatVector hdual = to_rational(IntVector(lattice.gram() * ctx.h()));

  // Majorant F(x) = 2 q(x, h)² / q(h) - q(x, x): positive definite because
  // h^⊥ is negative definite. Solutions with pairing t have F = 2t²/q(h) - s.
  const RatMatrix majorant =
      Rational(2) / Rational(hh) * (hdual * hdual.transpose()) - to_rational(lattice.gram());
  const Rational bound =
      Rational(2) * Rational(pairing_max) * Rational(pairing_max) / Rational(hh) - Rational(square);

  enumerate_short_vectors(majorant, bound, [&](const IntVector& x) {
    const Integer t = q_eval(lattice, x, ctx.h());
    if (t <= 0 || t > pairing_max) return;
    if (q_eval(lattice, x, x) != square) return;
    if (primitive_only && content(x) != 1) return;
    found.push_back(x);
  });
  std::sort(found.begin(), found.end(), LexLess{});
  return found;
}

std::vector<int> chamber_signature(const ConeContext& ctx, const FramedVector& x) {
  if (!in_positive_cone(ctx, x)) {
    throw Error(ErrorCode::outside_positive_cone, "vector is not in the positive cone");
  }
  std::vector<int> signs;
  signs.reserve(ctx.walls().size());
  for (std::size_t i = 0; i < ctx.walls().size(); ++i) {
    const int s = sign(pairing(ctx.lattice(), x.coords(), ctx.walls()[i]));
    if (s == 0) throw Error(ErrorCode::on_wall, "vector lies on wall " + index_text(i));
    signs.push_back(s);
  }
  return signs;
}

namespace {

// factor with v = factor · w, if any.
std::optional<Rational> proportionality(const IntVector& v, const IntVector& w) {
  std::optional<Rational> factor;
  for (Index i = 0; i < v.size(); ++i) {
    if (w(i) == 0) {
      if (v(i) != 0) return std::nullopt;
      continue;
    }
    const Rational r(v(i), w(i));
    if (factor && *factor != r) return std::nullopt;
    factor = r;
  }
  return factor;
}

}  // namespace

WallVerdict is_wall_divisor(const ConeContext& ctx, const IntVector& d, std::size_t budget) {
  require_rank(ctx.lattice(), d.size(), "divisor");
  if (d.isZero()) throw Error(ErrorCode::zero_vector, "wall test needs a nonzero class");
  WallVerdict verdict;
  if (q_eval(ctx.lattice(), d, d) >= 0) {
    verdict.failed_condition = WallFailure::negativity;
    return verdict;
  }
  const Orbit orbit = monodromy_orbit(ctx, d, budget);
  verdict.orbit_closed = orbit.closed;
  for (const auto& v : orbit.elements) {
    for (std::size_t w = 0; w < ctx.walls().size(); ++w) {
      const auto factor = proportionality(v, ctx.walls()[w]);
      if (factor && *factor > 0) {
        verdict.is_wall = true;
        verdict.witness = WallWitness{v, w, *factor};
        return verdict;
      }
    }
  }
  verdict.failed_condition = WallFailure::no_wall_match;
  return verdict;
}

}  // namespace symplat
