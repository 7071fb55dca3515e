#pragma once

#include <cstddef>
#include <vector>

#include "approxseq/scalar.hpp"

namespace approxseq {

/// A finite prefix u_0..u_{N-1} of a sequence, N >= 1, all entries in
/// one arithmetic mode. Immutable after construction.
class Seq {
public:
  explicit Seq(std::vector<Scalar> values);

  std::size_t size() const { return values_.size(); }
  const Scalar& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Scalar>& values() const { return values_; }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  Mode mode() const { return values_.front().mode(); }
  double tol() const { return values_.front().tol(); }

  /// An integer literal carrying this sequence's mode.
  Scalar like(long long v) const { return values_.front().like(v); }

private:
  std::vector<Scalar> values_;
};

/// Consecutive increments deltas[i] = u_{i+1} - u_i, length N-1.
struct DifferenceProfile {
  std::vector<Scalar> deltas;
};

Seq seq_from_values(std::vector<Scalar> values);

/// Requires N >= 2.
DifferenceProfile differences(const Seq& u);

/// True when every entry of `a` compares eq() to the matching entry of `b`.
bool seq_eq(const Seq& a, const Seq& b);

} // namespace approxseq
