#include "symplat/error.hpp"

namespace symplat {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse: return "parse";
    case ErrorCode::schema: return "schema";
    case ErrorCode::io: return "io";
    case ErrorCode::not_square: return "not_square";
    case ErrorCode::non_symmetric: return "non_symmetric";
    case ErrorCode::singular_gram: return "singular_gram";
    case ErrorCode::frame_mismatch: return "frame_mismatch";
    case ErrorCode::length_mismatch: return "length_mismatch";
    case ErrorCode::zero_vector: return "zero_vector";
    case ErrorCode::not_integral: return "not_integral";
    case ErrorCode::degenerate_root: return "degenerate_root";
    case ErrorCode::nonnegative_root: return "nonnegative_root";
    case ErrorCode::bad_signature: return "bad_signature";
    case ErrorCode::nonpositive_reference: return "nonpositive_reference";
    case ErrorCode::prime_not_negative: return "prime_not_negative";
    case ErrorCode::prime_pairing_negative: return "prime_pairing_negative";
    case ErrorCode::wall_not_negative: return "wall_not_negative";
    case ErrorCode::non_isometric_generator: return "non_isometric_generator";
    case ErrorCode::generator_swaps_components: return "generator_swaps_components";
    case ErrorCode::outside_positive_cone: return "outside_positive_cone";
    case ErrorCode::on_wall: return "on_wall";
    case ErrorCode::not_pseudo_effective: return "not_pseudo_effective";
    case ErrorCode::inconsistent_prime_set: return "inconsistent_prime_set";
    case ErrorCode::decomposition_mismatch: return "decomposition_mismatch";
    case ErrorCode::degenerate_moduli: return "degenerate_moduli";
    case ErrorCode::bound_overflow: return "bound_overflow";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::unknown_row: return "unknown_row";
    case ErrorCode::unknown_center: return "unknown_center";
    case ErrorCode::empty_center: return "empty_center";
    case ErrorCode::poset_cycle: return "poset_cycle";
  }
  return "unknown";
}

}  // namespace symplat
