#pragma once

#include <cstddef>
#include <vector>

#include "approxseq/scalar.hpp"
#include "approxseq/seq.hpp"

namespace approxseq {

/// A continuous piecewise-linear function on a compact interval, stored
/// as strictly increasing breakpoint abscissae with ordinates. Kept in
/// normalized form: no three consecutive collinear breakpoints, so two
/// functions are equal iff their breakpoint lists match.
class PLFunc {
public:
  PLFunc(std::vector<Scalar> xs, std::vector<Scalar> ys);

  std::size_t points() const { return xs_.size(); }
  std::size_t segments() const { return xs_.size() - 1; }
  const Scalar& x(std::size_t i) const { return xs_[i]; }
  const Scalar& y(std::size_t i) const { return ys_[i]; }
  const std::vector<Scalar>& xs() const { return xs_; }
  const std::vector<Scalar>& ys() const { return ys_; }

  const Scalar& domain_lo() const { return xs_.front(); }
  const Scalar& domain_hi() const { return xs_.back(); }

  Mode mode() const { return xs_.front().mode(); }
  double tol() const { return xs_.front().tol(); }
  Scalar like(long long v) const { return xs_.front().like(v); }

private:
  std::vector<Scalar> xs_, ys_;
};

/// Slopes of the K segments, recomputable from the breakpoints exactly.
struct SlopeProfile {
  std::vector<Scalar> slopes;
};

SlopeProfile slope_profile(const PLFunc& f);

/// The PL interpolant through (n, u_n) for n = 0..N-1, normalized.
/// Requires N >= 2. Its domain is [0, N-1]; no extrapolation.
PLFunc extend(const Seq& u);

/// Linear interpolation on the containing segment; exact in exact mode,
/// and returns the stored ordinate at a breakpoint. Throws DomainError
/// outside [domain_lo, domain_hi].
Scalar eval(const PLFunc& f, const Scalar& x);

/// (f(y) - f(x)) / (y - x). Throws InputError when x equals y.
Scalar chord_slope(const PLFunc& f, const Scalar& x, const Scalar& y);

/// True iff the segment slopes are nondecreasing.
bool is_convex_fn(const PLFunc& f);

/// Least eps with f(x) - f(y) <= eps for all x < y in the domain. PL
/// extrema sit at breakpoints, so a breakpoint scan is exact.
Scalar eps_monotone_deficit_fn(const PLFunc& f);

/// Least eps for the two-sided chord inequality; for a PL function this
/// is max(0, max_{i<j}(s_i - s_j)) over segment slopes.
Scalar eps_convex_deficit_fn(const PLFunc& f);

struct MediantBounds {
  Scalar lo, mid, hi;
};

/// lo = min_i a_i/b_i, mid = (sum a)/(sum b), hi = max_i a_i/b_i, with
/// lo <= mid <= hi guaranteed. Denominators must be positive.
MediantBounds mediant_bounds(const std::vector<Scalar>& numerators,
                             const std::vector<Scalar>& denominators);

/// Breakpoint-for-breakpoint equality (eq() on every coordinate).
bool pl_equal(const PLFunc& a, const PLFunc& b);

/// The function x -> -f(x).
PLFunc negate(const PLFunc& f);

} // namespace approxseq
