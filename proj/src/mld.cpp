#include "symplat/mld.hpp"

#include "symplat/error.hpp"

#include <algorithm>

namespace symplat {

LogPairTable::LogPairTable(std::vector<LogPairRow> rows, const std::vector<Containment>& containment,
                           bool complete)
    : rows_(std::move(rows)), complete_(complete) {
  std::set<std::string> labels;
  for (const auto& r : rows_) {
    if (r.label.empty() || r.center.empty()) {
      throw Error(ErrorCode::invalid_argument, "row and center labels must be nonempty");
    }
    if (!labels.insert(r.label).second) {
      throw Error(ErrorCode::invalid_argument, "duplicate row label '" + r.label + "'");
    }
    if (r.d < 0) {
      throw Error(ErrorCode::invalid_argument, "row '" + r.label + "' has negative boundary multiplicity");
    }
    centers_.insert(r.center);
  }
  for (const auto& [a, b] : containment) {
    if (a.empty() || b.empty()) throw Error(ErrorCode::invalid_argument, "center labels must be nonempty");
    centers_.insert(a);
    centers_.insert(b);
  }
  for (const auto& c : centers_) below_[c] = {c};
  for (const auto& [a, b] : containment) below_[b].insert(a);

  // Transitive closure, Warshall style over the (small) set of centers.
  for (const auto& k : centers_) {
    for (const auto& i : centers_) {
      if (!below_[i].contains(k)) continue;
      const auto& add = below_[k];
      below_[i].insert(add.begin(), add.end());
    }
  }
  for (const auto& [b, under] : below_) {
    for (const auto& a : under) {
      if (a != b && below_[a].contains(b)) {
        throw Error(ErrorCode::poset_cycle, "centers '" + a + "' and '" + b + "' contain each other");
      }
    }
  }
}

const LogPairRow& LogPairTable::row(const std::string& label) const {
  const auto it = std::find_if(rows_.begin(), rows_.end(), [&](const auto& r) { return r.label == label; });
  if (it == rows_.end()) throw Error(ErrorCode::unknown_row, "no row labelled '" + label + "'");
  return *it;
}

bool LogPairTable::contained(const std::string& a, const std::string& b) const {
  if (!centers_.contains(a)) throw Error(ErrorCode::unknown_center, "unknown center '" + a + "'");
  const auto it = below_.find(b);
  if (it == below_.end()) throw Error(ErrorCode::unknown_center, "unknown center '" + b + "'");
  return it->second.contains(a);
}

std::vector<std::string> LogPairTable::centers_under(const std::string& z) const {
  const auto it = below_.find(z);
  if (it == below_.end()) throw Error(ErrorCode::unknown_center, "unknown center '" + z + "'");
  return {it->second.begin(), it->second.end()};
}

std::strong_ordering operator<=>(const MldValue& a, const MldValue& b) {
  if (!a.is_finite() || !b.is_finite()) return a.is_finite() <=> b.is_finite();
  if (a.value() < b.value()) return std::strong_ordering::less;
  if (b.value() < a.value()) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const MldValue& v) { return v.is_finite() ? to_string(v.value()) : "-inf"; }

namespace {

Rational discrepancy(const LogPairRow& r) { return Rational(1) + r.k - r.d; }

std::optional<Rational> min_at(const LogPairTable& table, const std::string& center) {
  std::optional<Rational> m;
  for (const auto& r : table.rows()) {
    if (r.center != center) continue;
    const Rational a = discrepancy(r);
    if (!m || a < *m) m = a;
  }
  return m;
}

MldValue collapse(const Rational& m) { return m < 0 ? MldValue::minus_infinity() : MldValue::finite(m); }

}  // namespace

Rational log_discrepancy(const LogPairTable& table, const std::string& row) {
  return discrepancy(table.row(row));
}

MldValue mld_at(const LogPairTable& table, const std::string& center) {
  if (!table.centers().contains(center)) {
    throw Error(ErrorCode::unknown_center, "unknown center '" + center + "'");
  }
  const auto m = min_at(table, center);
  if (!m) throw Error(ErrorCode::empty_center, "no rows at center '" + center + "'");
  return collapse(*m);
}

MldValue mld_along(const LogPairTable& table, const std::string& z) {
  std::optional<Rational> m;
  for (const auto& c : table.centers_under(z)) {
    const auto here = min_at(table, c);
    if (here && (!m || *here < *m)) m = here;
  }
  if (!m) throw Error(ErrorCode::empty_center, "no rows at centers contained in '" + z + "'");
  return collapse(*m);
}

AccReport check_sequence_acc(const std::vector<Rational>& values) {
  AccReport report;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[i - 1]) report.increase_points.push_back(i);
    if (values[i] < values[i - 1]) report.decrease_points.push_back(i);
  }
  if (!report.increase_points.empty()) {
    report.stationary_from = report.increase_points.back();
    report.stationary = report.stationary_from + 1 < values.size();
  }
  return report;
}

}  // namespace symplat
