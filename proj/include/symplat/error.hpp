#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symplat {

// Every library failure carries one of these codes; error_name() gives the
// stable identifier the CLI prints.
enum class ErrorCode {
  parse,
  schema,
  io,
  not_square,
  non_symmetric,
  singular_gram,
  frame_mismatch,
  length_mismatch,
  zero_vector,
  not_integral,
  degenerate_root,
  nonnegative_root,
  bad_signature,
  nonpositive_reference,
  prime_not_negative,
  prime_pairing_negative,
  wall_not_negative,
  non_isometric_generator,
  generator_swaps_components,
  outside_positive_cone,
  on_wall,
  not_pseudo_effective,
  inconsistent_prime_set,
  decomposition_mismatch,
  degenerate_moduli,
  bound_overflow,
  invalid_argument,
  unknown_row,
  unknown_center,
  empty_center,
  poset_cycle,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace symplat
