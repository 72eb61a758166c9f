#pragma once

// Log discrepancies and minimal log discrepancies over a finite table of
// divisors on a resolution, indexed by their centers on the base.

#include "symplat/numeric.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace symplat {

struct LogPairRow {
  std::string label;
  Rational k;  // multiplicity in K_Y - π*K_X
  Rational d;  // multiplicity in π*Δ, nonnegative
  std::string center;
};

using Containment = std::pair<std::string, std::string>;  // first ⊆ second

class LogPairTable {
 public:
  // Centers are the labels named by rows or by containment pairs. The
  // containment relation is closed reflexively and transitively.
  // Errors: invalid_argument (duplicate row label, empty label, d < 0),
  // poset_cycle (two distinct centers contain each other).
  LogPairTable(std::vector<LogPairRow> rows, const std::vector<Containment>& containment,
               bool complete = false);

  const std::vector<LogPairRow>& rows() const { return rows_; }
  const std::set<std::string>& centers() const { return centers_; }
  bool complete() const { return complete_; }

  // Throws unknown_row.
  const LogPairRow& row(const std::string& label) const;
  // Whether a ⊆ b. Throws unknown_center.
  bool contained(const std::string& a, const std::string& b) const;
  // Centers contained in z, z included, ascending.
  std::vector<std::string> centers_under(const std::string& z) const;

 private:
  std::vector<LogPairRow> rows_;
  std::set<std::string> centers_;
  std::map<std::string, std::set<std::string>> below_;
  bool complete_;
};

// A rational number or −∞.
class MldValue {
 public:
  static MldValue minus_infinity() { return MldValue(); }
  static MldValue finite(Rational v) { return MldValue(std::move(v)); }

  bool is_finite() const { return value_.has_value(); }
  const Rational& value() const { return *value_; }

  friend bool operator==(const MldValue&, const MldValue&) = default;
  friend std::strong_ordering operator<=>(const MldValue& a, const MldValue& b);

 private:
  MldValue() = default;
  explicit MldValue(Rational v) : value_(std::move(v)) {}
  std::optional<Rational> value_;
};

std::string to_string(const MldValue& v);  // "-inf" or "p/q"

// a(E) = 1 + k_E - d_E. Throws unknown_row.
Rational log_discrepancy(const LogPairTable& table, const std::string& row);

// Minimum of a(E) over rows with exactly this center, −∞ once negative.
// Throws unknown_center, empty_center.
MldValue mld_at(const LogPairTable& table, const std::string& center);

// Minimum of mld_at over the centers contained in z that carry rows.
// Throws unknown_center, empty_center.
MldValue mld_along(const LogPairTable& table, const std::string& z);

struct AccReport {
  std::vector<std::size_t> increase_points;  // i with v[i] > v[i-1]
  std::vector<std::size_t> decrease_points;  // i with v[i] < v[i-1]
  bool stationary = true;                     // last increase before the final entry
  std::size_t stationary_from = 0;            // last increase point, or 0
};

AccReport check_sequence_acc(const std::vector<Rational>& values);

}  // namespace symplat
