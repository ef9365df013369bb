#pragma once

#include <cmath>

#include "patterndp/error.hpp"

namespace patterndp {

// Two-stage privacy budget: eps1 randomizes the partition thresholds, eps2
// randomizes the released bucket averages. alpha is the sensitivity, the
// maximum change of any single bin value between neighboring databases.
struct PrivacyBudget {
  double eps1;
  double eps2;
  double alpha;
};

inline void require_valid(const PrivacyBudget& b) {
  if (!(b.eps1 > 0) || !std::isfinite(b.eps1)) throw DomainError("eps1 must be positive");
  if (!(b.eps2 > 0) || !std::isfinite(b.eps2)) throw DomainError("eps2 must be positive");
  if (!(b.alpha > 0) || !std::isfinite(b.alpha)) throw DomainError("alpha must be positive");
}

// Sequential composition: the two stages run on the same data, so the total
// budget is the sum.
inline double total_epsilon(const PrivacyBudget& b) { return b.eps1 + b.eps2; }

}  // namespace patterndp
