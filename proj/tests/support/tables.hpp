#pragma once

#include "support/random.hpp"

#include "symplat/mld.hpp"

#include <string>
#include <vector>

namespace symplat::testing {

// Random table over centers c0..c{n-1}; containment edges only go from a
// lower to a higher index, so the relation is always antisymmetric.
inline LogPairTable random_table(Rng& rng, int centers, int rows) {
  std::vector<Containment> containment;
  for (int i = 0; i < centers; ++i) {
    for (int j = i + 1; j < centers; ++j) {
      if (rng.uniform(0, 3) == 0) containment.emplace_back("c" + std::to_string(i), "c" + std::to_string(j));
    }
  }
  std::vector<LogPairRow> table;
  for (int r = 0; r < rows; ++r) {
    table.push_back({"E" + std::to_string(r), Rational(rng.uniform(-2, 6), rng.uniform(1, 4)),
                     Rational(rng.uniform(0, 6), rng.uniform(1, 4)),
                     "c" + std::to_string(rng.uniform(0, centers - 1))});
  }
  return LogPairTable(std::move(table), containment, rng.coin());
}

}  // namespace symplat::testing
