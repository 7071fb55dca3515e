#include "approxseq/oracle.hpp"

#include <algorithm>
#include <vector>

#include "approxseq/detail/rng.hpp"
#include "approxseq/errors.hpp"
#include "approxseq/plfunc.hpp"

// Reference implementations, deliberately written as literal exhaustive
// scans of the defining inequalities. Nothing here calls the analyze or
// decompose modules.

namespace approxseq::oracle {

SeqClass seq_class_from_name(const std::string& name) {
  if (name == "arbitrary") return SeqClass::arbitrary;
  if (name == "monotone") return SeqClass::monotone;
  if (name == "convex") return SeqClass::convex;
  if (name == "eps-monotone") return SeqClass::eps_monotone;
  if (name == "eps-convex") return SeqClass::eps_convex;
  if (name == "positive-decreasing-convex") return SeqClass::positive_decreasing_convex;
  if (name == "log-convex") return SeqClass::log_convex;
  throw InputError("unknown sequence class: " + name);
}

std::string seq_class_name(SeqClass c) {
  switch (c) {
    case SeqClass::arbitrary: return "arbitrary";
    case SeqClass::monotone: return "monotone";
    case SeqClass::convex: return "convex";
    case SeqClass::eps_monotone: return "eps-monotone";
    case SeqClass::eps_convex: return "eps-convex";
    case SeqClass::positive_decreasing_convex: return "positive-decreasing-convex";
    case SeqClass::log_convex: return "log-convex";
  }
  return "?";
}

namespace {

Scalar ex(long long v) { return Scalar::exact(v); }

std::vector<Scalar> draw_exact(detail::SplitMix64& rng, std::size_t n, long long lo,
                               long long hi) {
  std::vector<Scalar> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(ex(rng.range(lo, hi)));
  return out;
}

void sort_ascending(std::vector<Scalar>& v) {
  std::sort(v.begin(), v.end(), [](const Scalar& a, const Scalar& b) { return raw_less(a, b); });
}

} // namespace

Seq generate(const GenSpec& spec) {
  const std::size_t n = spec.length;
  const long long bound = spec.value_bound;
  if (n < 1 || bound < 1) throw InputError("generator needs length >= 1 and a positive bound");
  const bool needs_eps =
      spec.cls == SeqClass::eps_monotone || spec.cls == SeqClass::eps_convex;
  if (needs_eps) {
    if (!spec.eps || !spec.eps->is_exact() || !ex(0).le(*spec.eps))
      throw InputError("this class needs a nonnegative exact epsilon");
  }
  detail::SplitMix64 rng(spec.seed);

  switch (spec.cls) {
    case SeqClass::arbitrary:
      return Seq(draw_exact(rng, n, -bound, bound));

    case SeqClass::monotone: {
      std::vector<Scalar> v = draw_exact(rng, n, -bound, bound);
      sort_ascending(v);
      return Seq(std::move(v));
    }

    case SeqClass::convex: {
      if (n < 3) throw InputError("convex generation needs length >= 3");
      std::vector<Scalar> inc = draw_exact(rng, n - 1, -4, 4);
      sort_ascending(inc);
      std::vector<Scalar> v{ex(rng.range(-bound, bound))};
      for (const Scalar& d : inc) v.push_back(v.back() + d);
      return Seq(std::move(v));
    }

    case SeqClass::eps_monotone: {
      // Nondecreasing base plus an oscillation within eps/2 of zero.
      std::vector<Scalar> base =
          draw_exact(rng, n, 0, std::max<long long>(1, static_cast<long long>(n) / 4));
      sort_ascending(base);
      const Scalar half = *spec.eps / ex(2);
      std::vector<Scalar> v;
      v.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        long long pick = rng.range(-1, 1);
        v.push_back(base[i] + half * ex(pick));
      }
      return Seq(std::move(v));
    }

    case SeqClass::eps_convex: {
      // Convex base plus a walk whose consecutive steps stay within eps/2.
      if (n < 3) throw InputError("eps-convex generation needs length >= 3");
      std::vector<Scalar> inc = draw_exact(rng, n - 1, -4, 4);
      sort_ascending(inc);
      const Scalar half = *spec.eps / ex(2);
      std::vector<Scalar> v{ex(rng.range(-bound, bound))};
      Scalar walk = ex(0);
      std::vector<Scalar> out{v.front() + walk};
      for (std::size_t i = 0; i + 1 < n; ++i) {
        v.push_back(v.back() + inc[i]);
        walk = walk + half * ex(rng.range(-1, 1));
        out.push_back(v.back() + walk);
      }
      return Seq(std::move(out));
    }

    case SeqClass::positive_decreasing_convex: {
      if (n < 3) throw InputError("this class needs length >= 3");
      std::vector<Scalar> drops = draw_exact(rng, n - 1, 0, 4);
      sort_ascending(drops);
      std::reverse(drops.begin(), drops.end());
      std::vector<Scalar> v{ex(rng.range(1, bound))};
      for (const Scalar& d : drops) v.push_back(v.back() + d);
      std::reverse(v.begin(), v.end());
      return Seq(std::move(v));
    }

    case SeqClass::log_convex: {
      if (n < 3) throw InputError("this class needs length >= 3");
      std::vector<Scalar> ratios;
      ratios.reserve(n - 1);
      for (std::size_t i = 0; i + 1 < n; ++i)
        ratios.push_back(ex(rng.range(1, 6)) / ex(rng.range(1, 6)));
      sort_ascending(ratios);
      std::vector<Scalar> v{ex(rng.range(1, bound))};
      for (const Scalar& r : ratios) v.push_back(v.back() * r);
      return Seq(std::move(v));
    }
  }
  throw InputError("unknown sequence class");
}

Scalar brute_deficit(const Seq& u, Property property, int k) {
  const std::size_t n = u.size();
  Scalar best = u.like(0);
  switch (property) {
    case Property::monotone: {
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t q = m + 1; q < n; ++q) best = max(best, u[m] - u[q]);
      return best;
    }
    case Property::convex: {
      if (n < 3) throw InputError("convex deficit needs at least three values");
      for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          best = max(best, (u[i] - u[i - 1]) - (u[j] - u[j - 1]));
      return best;
    }
    case Property::holder: {
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t q = m + 1; q < n; ++q) best = max(best, abs(u[m] - u[q]));
      return best;
    }
    case Property::lipschitz: {
      if (n < 2) throw InputError("Lipschitz modulus needs at least two values");
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t q = m + 1; q < n; ++q)
          best = max(best, abs(u[q] - u[m]) / u.like(static_cast<long long>(q - m)));
      return best;
    }
    case Property::order_k: {
      if (k < 1) throw InputError("difference order must be positive");
      if (n < static_cast<std::size_t>(k) + 1)
        throw InputError("order-k deficit needs at least k+1 values");
      // Pascal's triangle, as an independent route to the coefficients.
      std::vector<std::vector<long long>> pascal(static_cast<std::size_t>(k) + 1);
      for (std::size_t row = 0; row <= static_cast<std::size_t>(k); ++row) {
        pascal[row].assign(row + 1, 1);
        for (std::size_t c = 1; c < row; ++c)
          pascal[row][c] = pascal[row - 1][c - 1] + pascal[row - 1][c];
      }
      for (std::size_t m = 0; m + static_cast<std::size_t>(k) < n; ++m) {
        Scalar s = u.like(0);
        for (std::size_t r = 0; r <= static_cast<std::size_t>(k); ++r) {
          Scalar term = u.like(pascal[static_cast<std::size_t>(k)][r]) *
                        u[m + static_cast<std::size_t>(k) - r];
          s = (r % 2 == 0) ? s + term : s - term;
        }
        best = max(best, -s);
      }
      return best;
    }
  }
  throw InputError("unknown property");
}

namespace {

// ---- falsifier ------------------------------------------------------
//
// Each proposition has a hypothesis filter and a conclusion check. The
// search first enumerates small integer sequences (values 1..6, N up to
// 5), then runs seeded random trials; the first violation wins.

bool nonincreasing_seq(const std::vector<Scalar>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (raw_less(v[i], v[i + 1])) return false;
  return true;
}

bool nondecreasing_seq(const std::vector<Scalar>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (raw_less(v[i + 1], v[i])) return false;
  return true;
}

bool convex_seq(const std::vector<Scalar>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (raw_less(v[j] - v[j - 1], v[i] - v[i - 1])) return false;
  return true;
}

bool concave_seq(const std::vector<Scalar>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (raw_less(v[i] - v[i - 1], v[j] - v[j - 1])) return false;
  return true;
}

std::string render(const std::vector<Scalar>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].text();
  }
  return s + "]";
}

// First interior index where 2*v_n >= v_{n-1} + v_{n+1} fails, or size().
std::size_t concavity_break(const std::vector<Scalar>& v) {
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    if (raw_less(ex(2) * v[i], v[i - 1] + v[i + 1])) return i;
  return v.size();
}

std::size_t convexity_break(const std::vector<Scalar>& v) {
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    if (raw_less(v[i - 1] + v[i + 1], ex(2) * v[i])) return i;
  return v.size();
}

std::optional<Counterexample> check_p1(const std::vector<Scalar>& u) {
  const Scalar zero = ex(0);
  for (const Scalar& s : u)
    if (raw_less(s, zero)) return std::nullopt;
  for (std::size_t i = 1; i + 1 < u.size(); ++i)
    if (raw_less(u[i - 1] * u[i + 1], u[i] * u[i])) return std::nullopt; // hypothesis fails
  std::size_t at = convexity_break(u);
  if (at == u.size()) return std::nullopt;
  return Counterexample{
      "P1", Seq(u),
      "2*u[" + std::to_string(at) + "] <= u[" + std::to_string(at - 1) + "] + u[" +
          std::to_string(at + 1) + "] fails: " + (ex(2) * u[at]).text() + " > " +
          (u[at - 1] + u[at + 1]).text() + " for u = " + render(u)};
}

std::optional<Counterexample> check_p2_forward(const std::vector<Scalar>& u) {
  const Scalar zero = ex(0);
  for (const Scalar& s : u)
    if (!raw_less(zero, s)) return std::nullopt;
  if (!nonincreasing_seq(u) || !convex_seq(u)) return std::nullopt;
  std::vector<Scalar> recip;
  recip.reserve(u.size());
  for (const Scalar& s : u) recip.push_back(ex(1) / s);
  std::size_t at = concavity_break(recip);
  bool monotone_ok = nondecreasing_seq(recip);
  if (at == recip.size() && monotone_ok) return std::nullopt;
  std::string why;
  if (at < recip.size())
    why = "reciprocal is not concave: 2*v[" + std::to_string(at) + "] >= v[" +
          std::to_string(at - 1) + "] + v[" + std::to_string(at + 1) +
          "] fails: " + (ex(2) * recip[at]).text() + " < " +
          (recip[at - 1] + recip[at + 1]).text();
  else
    why = "reciprocal is not nondecreasing";
  return Counterexample{"P2_forward", Seq(u),
                        why + "; u = " + render(u) + ", v = 1/u = " + render(recip)};
}

std::optional<Counterexample> check_p2_reverse(const std::vector<Scalar>& v) {
  const Scalar zero = ex(0);
  for (const Scalar& s : v)
    if (!raw_less(zero, s)) return std::nullopt;
  if (!nondecreasing_seq(v) || !concave_seq(v)) return std::nullopt;
  std::vector<Scalar> recip;
  recip.reserve(v.size());
  for (const Scalar& s : v) recip.push_back(ex(1) / s);
  std::size_t at = convexity_break(recip);
  bool monotone_ok = nonincreasing_seq(recip);
  if (at == recip.size() && monotone_ok) return std::nullopt;
  std::string why;
  if (at < recip.size())
    why = "reciprocal is not convex: 2*u[" + std::to_string(at) + "] <= u[" +
          std::to_string(at - 1) + "] + u[" + std::to_string(at + 1) +
          "] fails: " + (ex(2) * recip[at]).text() + " > " +
          (recip[at - 1] + recip[at + 1]).text();
  else
    why = "reciprocal is not nonincreasing";
  return Counterexample{"P2_reverse", Seq(v),
                        why + "; v = " + render(v) + ", u = 1/v = " + render(recip)};
}

// Enumerates integer sequences of length n with values in [1, bound],
// applying `check` to each; lexicographic order, first hit wins.
template <class Check>
std::optional<Counterexample> enumerate_small(std::size_t n, long long bound, Check check) {
  std::vector<long long> idx(n, 1);
  while (true) {
    std::vector<Scalar> u;
    u.reserve(n);
    for (long long t : idx) u.push_back(ex(t));
    if (auto c = check(u)) return c;
    std::size_t pos = n;
    while (pos > 0) {
      if (idx[pos - 1] < bound) {
        ++idx[pos - 1];
        break;
      }
      idx[pos - 1] = 1;
      --pos;
    }
    if (pos == 0) return std::nullopt;
  }
}

std::optional<Counterexample> check_p20000(detail::SplitMix64& rng) {
  static const long long eps_nums[] = {1, 1, 3};
  static const long long eps_dens[] = {2, 1, 1};
  std::size_t pick = static_cast<std::size_t>(rng.below(3));
  const Scalar eps = ex(eps_nums[pick]) / ex(eps_dens[pick]);
  const Scalar half = eps / ex(2);
  std::size_t n = static_cast<std::size_t>(rng.range(3, 16));
  std::vector<Scalar> inc = draw_exact(rng, n - 1, -4, 4);
  sort_ascending(inc);
  std::vector<Scalar> u{ex(rng.range(-10, 10))};
  for (const Scalar& d : inc) u.push_back(u.back() + d);
  std::vector<Scalar> w;
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Oscillation within [0, eps/2]: an eps/2-Hoelder perturbation.
    Scalar h = half * ex(rng.range(0, 2)) / ex(2);
    w.push_back(u[i] + h);
  }
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar lhs = w[i] - w[i - 1];
      Scalar rhs = w[j] - w[j - 1] + eps;
      if (raw_less(rhs, lhs))
        return Counterexample{
            "P20000", Seq(w),
            "w[" + std::to_string(i) + "] - w[" + std::to_string(i - 1) + "] <= w[" +
                std::to_string(j) + "] - w[" + std::to_string(j - 1) +
                "] + eps fails with eps = " + eps.text() + ": " + lhs.text() + " > " +
                rhs.text() + " for w = " + render(w)};
    }
  return std::nullopt;
}

std::optional<Counterexample> check_t9999(detail::SplitMix64& rng) {
  // Nondecreasing convex PL function on [0, segs].
  std::size_t segs = static_cast<std::size_t>(rng.range(2, 6));
  std::vector<Scalar> slopes;
  slopes.reserve(segs);
  for (std::size_t i = 0; i < segs; ++i)
    slopes.push_back(ex(rng.range(0, 8)) / ex(rng.range(1, 4)));
  sort_ascending(slopes);
  std::vector<Scalar> xs{ex(0)}, ys{ex(rng.range(-5, 5))};
  for (std::size_t i = 0; i < segs; ++i) {
    xs.push_back(ex(static_cast<long long>(i) + 1));
    ys.push_back(ys.back() + slopes[i]);
  }
  PLFunc f(std::move(xs), std::move(ys));

  // Strictly increasing convex sequence scaled into [0, segs].
  std::size_t n = static_cast<std::size_t>(rng.range(3, 10));
  std::vector<Scalar> inc = draw_exact(rng, n - 1, 1, 5);
  sort_ascending(inc);
  Scalar total = ex(0);
  for (const Scalar& d : inc) total = total + d;
  std::vector<Scalar> u{ex(0)};
  Scalar run = ex(0);
  const Scalar width = ex(static_cast<long long>(segs));
  for (const Scalar& d : inc) {
    run = run + d;
    u.push_back(width * run / total);
  }

  std::vector<Scalar> fu;
  fu.reserve(n);
  for (const Scalar& x : u) fu.push_back(eval(f, x));
  std::size_t at = convexity_break(fu);
  if (at == fu.size()) return std::nullopt;
  return Counterexample{
      "T9999", Seq(fu),
      "2*f(u[" + std::to_string(at) + "]) <= f(u[" + std::to_string(at - 1) + "]) + f(u[" +
          std::to_string(at + 1) + "]) fails: " + (ex(2) * fu[at]).text() + " > " +
          (fu[at - 1] + fu[at + 1]).text() + " for f(u) = " + render(fu)};
}

} // namespace

std::optional<Counterexample> falsify(const std::string& proposition, int trials,
                                      std::uint64_t seed) {
  if (trials < 1) throw InputError("trial count must be positive");
  const long long small_bound = 6;

  if (proposition == "P1") {
    for (std::size_t n = 3; n <= 5; ++n)
      if (auto c = enumerate_small(n, small_bound, check_p1)) return c;
    for (int t = 0; t < trials; ++t) {
      detail::SplitMix64 rng(seed + static_cast<std::uint64_t>(t));
      GenSpec spec{SeqClass::log_convex, static_cast<std::size_t>(rng.range(3, 12)),
                   seed ^ static_cast<std::uint64_t>(t * 2654435761ULL), 10, std::nullopt};
      if (auto c = check_p1(generate(spec).values())) return c;
    }
    return std::nullopt;
  }

  if (proposition == "P2_forward") {
    for (std::size_t n = 3; n <= 5; ++n)
      if (auto c = enumerate_small(n, small_bound, check_p2_forward)) return c;
    for (int t = 0; t < trials; ++t) {
      detail::SplitMix64 rng(seed + static_cast<std::uint64_t>(t));
      GenSpec spec{SeqClass::positive_decreasing_convex,
                   static_cast<std::size_t>(rng.range(3, 12)),
                   seed ^ static_cast<std::uint64_t>(t * 2654435761ULL), 10, std::nullopt};
      if (auto c = check_p2_forward(generate(spec).values())) return c;
    }
    return std::nullopt;
  }

  if (proposition == "P2_reverse") {
    for (std::size_t n = 3; n <= 5; ++n)
      if (auto c = enumerate_small(n, small_bound, check_p2_reverse)) return c;
    for (int t = 0; t < trials; ++t) {
      detail::SplitMix64 rng(seed + static_cast<std::uint64_t>(t));
      GenSpec spec{SeqClass::positive_decreasing_convex,
                   static_cast<std::size_t>(rng.range(3, 12)),
                   seed ^ static_cast<std::uint64_t>(t * 2654435761ULL), 10, std::nullopt};
      Seq q = generate(spec);
      // Reflect a positive decreasing convex sequence into a positive
      // nondecreasing concave one.
      Scalar top = q[0];
      for (std::size_t i = 1; i < q.size(); ++i) top = max(top, q[i]);
      Scalar shift = top + ex(rng.range(1, 10));
      std::vector<Scalar> v;
      v.reserve(q.size());
      for (std::size_t i = 0; i < q.size(); ++i) v.push_back(shift - q[i]);
      if (auto c = check_p2_reverse(v)) return c;
    }
    return std::nullopt;
  }

  if (proposition == "P20000") {
    for (int t = 0; t < trials; ++t) {
      detail::SplitMix64 rng(seed + static_cast<std::uint64_t>(t));
      if (auto c = check_p20000(rng)) return c;
    }
    return std::nullopt;
  }

  if (proposition == "T9999") {
    for (int t = 0; t < trials; ++t) {
      detail::SplitMix64 rng(seed + static_cast<std::uint64_t>(t));
      if (auto c = check_t9999(rng)) return c;
    }
    return std::nullopt;
  }

  throw InputError("unknown proposition: " + proposition);
}

} // namespace approxseq::oracle
