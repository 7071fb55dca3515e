#include "approxseq/analyze.hpp"

#include <vector>

#include "approxseq/errors.hpp"

namespace approxseq {

std::string property_name(Property p) {
  switch (p) {
    case Property::monotone: return "monotone";
    case Property::convex: return "convex";
    case Property::holder: return "holder";
    case Property::lipschitz: return "lipschitz";
    case Property::order_k: return "order-k";
  }
  return "?";
}

namespace {

// Largest drop max_{m<n}(a_m - a_n) over a list, with the
// lexicographically smallest argmax pair. A running prefix maximum
// suffices: the earliest prefix argmax is the only admissible first
// coordinate for any pair attaining the overall maximum, and it is
// nondecreasing in n, so updating only on strict improvement lands on
// the lex-min witness.
struct DropScan {
  Scalar value;
  std::size_t m = 0, n = 0;
  bool positive = false;
};

DropScan largest_drop(const std::vector<Scalar>& a) {
  DropScan best{a.front().like(0)};
  Scalar pref = a.front();
  std::size_t pref_idx = 0;
  bool have = false;
  for (std::size_t n = 1; n < a.size(); ++n) {
    Scalar d = pref - a[n];
    if (!have || raw_less(best.value, d)) {
      best.value = d;
      best.m = pref_idx;
      best.n = n;
      have = true;
    }
    if (raw_less(pref, a[n])) {
      pref = a[n];
      pref_idx = n;
    }
  }
  best.positive = have && raw_less(a.front().like(0), best.value);
  return best;
}

DeficitReport make_report(const Seq& u, Property p, int k, Scalar eps,
                          std::vector<std::size_t> witness) {
  DeficitReport r{p, k, std::move(eps), std::move(witness), u.mode(), u.tol()};
  return r;
}

} // namespace

DeficitReport monotone_deficit(const Seq& u) {
  if (u.size() == 1)
    return make_report(u, Property::monotone, 0, u.like(0), {});
  DropScan d = largest_drop(u.values());
  if (!d.positive) return make_report(u, Property::monotone, 0, u.like(0), {});
  return make_report(u, Property::monotone, 0, d.value, {d.m, d.n});
}

DeficitReport convex_deficit(const Seq& u) {
  if (u.size() < 3) throw InputError("convex deficit needs at least three values");
  DropScan d = largest_drop(differences(u).deltas);
  if (!d.positive) return make_report(u, Property::convex, 0, u.like(0), {});
  // Increment indices run 1..N-1 in the report.
  return make_report(u, Property::convex, 0, d.value, {d.m + 1, d.n + 1});
}

DeficitReport holder_deficit(const Seq& u) {
  std::size_t imax = 0, imin = 0;
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (raw_less(u[imax], u[i])) imax = i;
    if (raw_less(u[i], u[imin])) imin = i;
  }
  Scalar range = u[imax] - u[imin];
  if (!raw_less(u.like(0), range))
    return make_report(u, Property::holder, 0, u.like(0), {});
  std::size_t m = std::min(imax, imin), n = std::max(imax, imin);
  return make_report(u, Property::holder, 0, range, {m, n});
}

DeficitReport lipschitz_modulus(const Seq& u) {
  if (u.size() < 2) throw InputError("Lipschitz modulus needs at least two values");
  // The all-pairs maximum of |u_n - u_m| / (n - m) is attained at a
  // consecutive pair, and the first such pair is the lex-min witness.
  std::size_t at = 0;
  Scalar best = abs(u[1] - u[0]);
  for (std::size_t i = 1; i + 1 < u.size(); ++i) {
    Scalar d = abs(u[i + 1] - u[i]);
    if (raw_less(best, d)) {
      best = d;
      at = i;
    }
  }
  if (!raw_less(u.like(0), best))
    return make_report(u, Property::lipschitz, 0, u.like(0), {});
  return make_report(u, Property::lipschitz, 0, best, {at, at + 1});
}

DeficitReport order_k_deficit(const Seq& u, int k) {
  if (k < 1) throw InputError("difference order must be positive");
  if (u.size() < static_cast<std::size_t>(k) + 1)
    throw InputError("order-k deficit needs at least k+1 values");
  // Alternating binomial coefficients for u_m..u_{m+k}, built in the
  // sequence's own arithmetic so large orders cannot overflow.
  std::vector<Scalar> coeff;
  coeff.reserve(static_cast<std::size_t>(k) + 1);
  coeff.push_back(u.like(1));
  for (int j = 1; j <= k; ++j)
    coeff.push_back(coeff.back() * u.like(k - j + 1) / u.like(j));
  for (int j = 0; j <= k; ++j)
    if ((k - j) % 2 != 0) coeff[static_cast<std::size_t>(j)] = -coeff[static_cast<std::size_t>(j)];

  bool have = false;
  Scalar worst = u.like(0);
  std::size_t at = 0;
  for (std::size_t m = 0; m + static_cast<std::size_t>(k) < u.size(); ++m) {
    Scalar s = u.like(0);
    for (int j = 0; j <= k; ++j)
      s = s + coeff[static_cast<std::size_t>(j)] * u[m + static_cast<std::size_t>(j)];
    if (!have || raw_less(s, worst)) {
      worst = s;
      at = m;
      have = true;
    }
  }
  if (!raw_less(worst, u.like(0)))
    return make_report(u, Property::order_k, k, u.like(0), {});
  return make_report(u, Property::order_k, k, -worst, {at});
}

bool geometric_mean_test(const Seq& u) {
  if (u.size() < 3) throw InputError("geometric-mean test needs at least three values");
  const Scalar zero = u.like(0);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!zero.le(u[i])) throw InputError("geometric-mean test requires nonnegative values");
  for (std::size_t n = 1; n + 1 < u.size(); ++n)
    if (!(u[n] * u[n]).le(u[n - 1] * u[n + 1])) return false;
  return true;
}

Scalar cauchy_epsilon(const Seq& u, std::size_t r, const Scalar& delta) {
  if (r >= u.size()) throw InputError("tail start index out of range");
  if (!u.like(0).le(delta)) throw InputError("tail oscillation bound must be nonnegative");
  for (std::size_t m = r; m < u.size(); ++m)
    for (std::size_t n = m + 1; n < u.size(); ++n)
      if (!abs(u[m] - u[n]).le(delta))
        throw PreconditionError("tail oscillation exceeds the bound at pair (" +
                                std::to_string(m) + ", " + std::to_string(n) + ")");
  Scalar gamma = delta;
  for (std::size_t p = 0; p <= r; ++p)
    for (std::size_t q = p + 1; q <= r; ++q) gamma = max(gamma, abs(u[p] - u[q]));
  return gamma + delta;
}

} // namespace approxseq
