#pragma once

#include <string>
#include <vector>

#include "approxseq/scalar.hpp"

namespace approxseq {

enum class Property { monotone, convex, holder, lipschitz, order_k };

std::string property_name(Property p);

/// The minimal epsilon for which a named approximate property holds,
/// together with an index tuple witnessing the maximum. The witness is
/// empty exactly when epsilon_min is zero; otherwise re-evaluating the
/// defining inequality at the witness reproduces epsilon_min.
struct DeficitReport {
  Property property;
  int k = 0; // order of the forward difference, order_k only
  Scalar epsilon_min;
  std::vector<std::size_t> witness;
  Mode mode = Mode::exact;
  double tol = 0.0;
};

} // namespace approxseq
