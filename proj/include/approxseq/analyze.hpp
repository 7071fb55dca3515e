#pragma once

#include "approxseq/report.hpp"
#include "approxseq/seq.hpp"

namespace approxseq {

/// Least eps with u_m <= u_n + eps for all m < n. Witness: the
/// lexicographically smallest argmax pair (m, n).
DeficitReport monotone_deficit(const Seq& u);

/// Least eps with D_i <= D_j + eps for all 1 <= i < j <= N-1, where
/// D_i = u_i - u_{i-1}. Zero exactly when the sequence is convex.
/// Requires N >= 3. Witness indices refer to increments.
DeficitReport convex_deficit(const Seq& u);

/// Least eps bounding the total oscillation: |u_m - u_n| <= eps for all
/// pairs; equals max(u) - min(u).
DeficitReport holder_deficit(const Seq& u);

/// Least l with |u_n - u_m| <= l * (n - m) for all pairs; equals the
/// largest consecutive |increment|. Requires N >= 2.
DeficitReport lipschitz_modulus(const Seq& u);

/// Least eps with (forward difference of order k at shift m) >= -eps for
/// every shift. Zero exactly when the sequence is k-th order convex.
/// k = 1 is the consecutive monotone check, k = 2 the three-term convex
/// inequality. Requires k >= 1 and N >= k + 1. Witness: [shift].
DeficitReport order_k_deficit(const Seq& u, int k);

/// True iff u_n^2 <= u_{n-1} * u_{n+1} for all interior n (the squared
/// form of the geometric-mean condition). Requires N >= 3 and u >= 0;
/// a true result implies convex_deficit(u) is zero.
bool geometric_mean_test(const Seq& u);

/// For a sequence whose tail beyond index r oscillates within delta
/// (checked), returns eps = gamma + delta with
/// gamma = max(max_{p,q <= r} |u_p - u_q|, delta). The result always
/// dominates monotone_deficit(u).epsilon_min.
Scalar cauchy_epsilon(const Seq& u, std::size_t r, const Scalar& delta);

} // namespace approxseq
