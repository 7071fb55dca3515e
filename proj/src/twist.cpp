#include "approxseq/twist.hpp"

#include <algorithm>

#include "approxseq/detail/rng.hpp"
#include "approxseq/errors.hpp"

namespace approxseq {

std::string symmetry_name(SymmetryClass s) {
  switch (s) {
    case SymmetryClass::even_about_midpoint: return "even_about_midpoint";
    case SymmetryClass::odd_about_midpoint: return "odd_about_midpoint";
    case SymmetryClass::none: return "none";
  }
  return "?";
}

PLFunc twist(const PLFunc& f) {
  const Scalar ends = f.domain_lo() + f.domain_hi();
  std::vector<Scalar> xs, ys;
  xs.reserve(f.points());
  ys.reserve(f.points());
  for (std::size_t i = f.points(); i-- > 0;) {
    xs.push_back(ends - f.x(i));
    ys.push_back(f.y(i));
  }
  return PLFunc(std::move(xs), std::move(ys));
}

namespace {

// Left derivative of g at u (u > domain_lo): the slope of the segment
// whose right end is at or beyond u.
Scalar left_derivative(const PLFunc& g, const Scalar& u) {
  std::size_t j = 0;
  while (j + 2 < g.points() && raw_less(g.x(j + 1), u)) ++j;
  return (g.y(j + 1) - g.y(j)) / (g.x(j + 1) - g.x(j));
}

// Deterministic rational in [lo, hi]; interior_only excludes lo.
Scalar random_point(detail::SplitMix64& rng, const Scalar& lo, const Scalar& hi,
                    bool interior_only) {
  long long den = rng.range(1, 97);
  long long num = rng.range(interior_only ? 1 : 0, den);
  Scalar t = lo.like(num) / lo.like(den);
  return lo + (hi - lo) * t;
}

} // namespace

Scalar slope_function(const PLFunc& f, const Scalar& u) {
  PLFunc g = twist(f);
  if (!is_convex_fn(g)) throw PreconditionError("f is not convex");
  if (!g.domain_lo().le(u) || !u.le(g.domain_hi()))
    throw DomainError("point outside the function domain");
  if (u.eq(g.domain_lo()))
    throw DomainError("no left chords at the left endpoint");
  return left_derivative(g, u);
}

SymmetryClass check_symmetry(const PLFunc& f) {
  PLFunc tf = twist(f);
  if (pl_equal(f, tf)) return SymmetryClass::even_about_midpoint;
  if (pl_equal(negate(f), tf)) return SymmetryClass::odd_about_midpoint;
  return SymmetryClass::none;
}

PLFunc recenter(const PLFunc& f) {
  const Scalar mid = (f.domain_lo() + f.domain_hi()) / f.like(2);
  std::vector<Scalar> xs;
  xs.reserve(f.points());
  for (const Scalar& x : f.xs()) xs.push_back(x - mid);
  return PLFunc(std::move(xs), f.ys());
}

bool is_periodic(const PLFunc& f, const Scalar& period) {
  const Scalar len = f.domain_hi() - f.domain_lo();
  if (!period.gt(f.like(0)) || !period.lt(len))
    throw InputError("period must lie strictly between 0 and the domain length");
  // f(x) == f(x + period) for every x with both points in the domain.
  // Both sides are PL in x, so agreement at the union of their
  // breakpoints (plus the overlap endpoints) decides it exactly.
  std::vector<Scalar> probes{f.domain_lo(), f.domain_hi() - period};
  for (std::size_t i = 0; i < f.points(); ++i) {
    if (f.x(i).le(f.domain_hi() - period)) probes.push_back(f.x(i));
    if (f.domain_lo().le(f.x(i) - period)) probes.push_back(f.x(i) - period);
  }
  for (const Scalar& x : probes)
    if (!eval(f, x).eq(eval(f, x + period))) return false;
  return true;
}

Thm11Report verify_thm11(const PLFunc& f, int sample_count, std::uint64_t seed) {
  if (sample_count < 1) throw InputError("sample count must be positive");
  Thm11Report report;
  report.seed = seed;
  report.samples = sample_count;

  PLFunc g = twist(f);
  const Scalar a = g.domain_lo();
  const Scalar b = g.domain_hi();

  // (i) f convex, on segment slopes.
  report.convex_f = is_convex_fn(f);
  if (!report.convex_f) {
    SlopeProfile p = slope_profile(f);
    for (std::size_t i = 0; i + 1 < p.slopes.size(); ++i)
      if (!p.slopes[i].le(p.slopes[i + 1])) {
        report.violations.push_back({"i", {f.x(i), f.x(i + 1), f.x(i + 2)}});
        break;
      }
  }

  // (ii) chord-slope inequality for twist(f): exact on its slopes.
  {
    SlopeProfile p = slope_profile(g);
    report.twist_chord_inequality = true;
    for (std::size_t i = 0; i + 1 < p.slopes.size(); ++i)
      if (!p.slopes[i].le(p.slopes[i + 1])) {
        report.twist_chord_inequality = false;
        report.violations.push_back({"ii", {g.x(i), g.x(i + 1), g.x(i + 2)}});
        break;
      }
  }

  // (iii) support inequality with the canonical candidate (the left
  // derivative of twist(f)): all breakpoint pairs, then random pairs.
  {
    detail::SplitMix64 rng(seed * 2 + 1);
    report.support_inequality = true;
    auto check = [&](const Scalar& u, const Scalar& x) {
      if (!report.support_inequality) return;
      Scalar phi = left_derivative(g, u);
      if (!(eval(g, u) + (x - u) * phi).le(eval(g, x))) {
        report.support_inequality = false;
        report.violations.push_back({"iii", {u, x}});
      }
    };
    for (std::size_t i = 1; i < g.points() && report.support_inequality; ++i)
      for (std::size_t j = 0; j < g.points() && report.support_inequality; ++j)
        check(g.x(i), g.x(j));
    for (int s = 0; s < sample_count && report.support_inequality; ++s) {
      Scalar u = random_point(rng, a, b, true);
      Scalar x = random_point(rng, a, b, false);
      check(u, x);
    }
  }

  // (iv) Jensen combinations for twist(f): the canonical triple at every
  // interior breakpoint, then random rational combinations of size <= 4.
  {
    detail::SplitMix64 rng(seed * 2 + 2);
    report.jensen_combination = true;
    auto record = [&](std::vector<Scalar> sample) {
      report.jensen_combination = false;
      report.violations.push_back({"iv", std::move(sample)});
    };
    for (std::size_t i = 1; i + 1 < g.points() && report.jensen_combination; ++i) {
      Scalar t = (g.x(i + 1) - g.x(i)) / (g.x(i + 1) - g.x(i - 1));
      Scalar rhs = t * g.y(i - 1) + (g.like(1) - t) * g.y(i + 1);
      if (!g.y(i).le(rhs)) record({t, g.like(1) - t, g.x(i - 1), g.x(i + 1)});
    }
    for (int s = 0; s < sample_count && report.jensen_combination; ++s) {
      std::size_t n = static_cast<std::size_t>(rng.range(2, 4));
      std::vector<Scalar> weights, points;
      long long total = 0;
      std::vector<long long> raw(n);
      for (std::size_t i = 0; i < n; ++i) {
        raw[i] = rng.range(1, 9);
        total += raw[i];
      }
      Scalar mix = g.like(0);
      Scalar rhs = g.like(0);
      for (std::size_t i = 0; i < n; ++i) {
        Scalar t = g.like(raw[i]) / g.like(total);
        Scalar x = random_point(rng, a, b, false);
        weights.push_back(t);
        points.push_back(x);
        mix = mix + t * x;
        rhs = rhs + t * eval(g, x);
      }
      if (!eval(g, mix).le(rhs)) {
        std::vector<Scalar> sample = weights;
        sample.insert(sample.end(), points.begin(), points.end());
        record(std::move(sample));
      }
    }
  }

  // (v) twist(f) convex.
  report.convex_twist = is_convex_fn(g);
  if (!report.convex_twist && report.twist_chord_inequality)
    report.violations.push_back({"v", {}});

  return report;
}

} // namespace approxseq
