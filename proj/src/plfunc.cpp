#include "approxseq/plfunc.hpp"

#include "approxseq/errors.hpp"

namespace approxseq {

namespace {

Scalar segment_slope(const Scalar& x0, const Scalar& y0, const Scalar& x1,
                     const Scalar& y1) {
  return (y1 - y0) / (x1 - x0);
}

} // namespace

PLFunc::PLFunc(std::vector<Scalar> xs, std::vector<Scalar> ys) {
  if (xs.size() != ys.size()) throw InputError("breakpoint lists differ in length");
  if (xs.size() < 2) throw InputError("a PL function needs at least two breakpoints");
  const Mode m = xs.front().mode();
  for (const Scalar& s : xs)
    if (s.mode() != m) throw ModeError("breakpoint abscissae mix modes");
  for (const Scalar& s : ys)
    if (s.mode() != m) throw ModeError("breakpoint ordinates mix modes");
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    if (!xs[i + 1].gt(xs[i]))
      throw InputError("breakpoint abscissae must be strictly increasing");

  // Normalize: drop interior breakpoints collinear with their neighbors,
  // so equality tests and the twist involution are representation-free.
  xs_.reserve(xs.size());
  ys_.reserve(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    while (xs_.size() >= 2) {
      std::size_t n = xs_.size();
      Scalar s0 = segment_slope(xs_[n - 2], ys_[n - 2], xs_[n - 1], ys_[n - 1]);
      Scalar s1 = segment_slope(xs_[n - 1], ys_[n - 1], xs[i], ys[i]);
      if (!s0.eq(s1)) break;
      xs_.pop_back();
      ys_.pop_back();
    }
    xs_.push_back(xs[i]);
    ys_.push_back(ys[i]);
  }
}

SlopeProfile slope_profile(const PLFunc& f) {
  SlopeProfile p;
  p.slopes.reserve(f.segments());
  for (std::size_t i = 0; i + 1 < f.points(); ++i)
    p.slopes.push_back(segment_slope(f.x(i), f.y(i), f.x(i + 1), f.y(i + 1)));
  return p;
}

PLFunc extend(const Seq& u) {
  if (u.size() < 2) throw InputError("extension needs at least two values");
  std::vector<Scalar> xs;
  xs.reserve(u.size());
  for (std::size_t n = 0; n < u.size(); ++n) xs.push_back(u.like(static_cast<long long>(n)));
  return PLFunc(std::move(xs), u.values());
}

Scalar eval(const PLFunc& f, const Scalar& x) {
  if (!f.domain_lo().le(x) || !x.le(f.domain_hi()))
    throw DomainError("point outside the function domain");
  // Breakpoints return their stored ordinate.
  for (std::size_t i = 0; i < f.points(); ++i)
    if (x.eq(f.x(i))) return f.y(i);
  std::size_t seg = 0;
  while (seg + 2 < f.points() && raw_less(f.x(seg + 1), x)) ++seg;
  const Scalar span = f.x(seg + 1) - f.x(seg);
  return (f.y(seg) * (f.x(seg + 1) - x) + f.y(seg + 1) * (x - f.x(seg))) / span;
}

Scalar chord_slope(const PLFunc& f, const Scalar& x, const Scalar& y) {
  if (x.eq(y)) throw InputError("chord endpoints coincide");
  return (eval(f, y) - eval(f, x)) / (y - x);
}

bool is_convex_fn(const PLFunc& f) {
  SlopeProfile p = slope_profile(f);
  for (std::size_t i = 0; i + 1 < p.slopes.size(); ++i)
    if (!p.slopes[i].le(p.slopes[i + 1])) return false;
  return true;
}

Scalar eps_monotone_deficit_fn(const PLFunc& f) {
  // sup f(x) - f(y) over x < y is attained at breakpoints.
  Scalar best = f.like(0);
  Scalar pref = f.y(0);
  for (std::size_t n = 1; n < f.points(); ++n) {
    best = max(best, pref - f.y(n));
    pref = max(pref, f.y(n));
  }
  return best;
}

Scalar eps_convex_deficit_fn(const PLFunc& f) {
  SlopeProfile p = slope_profile(f);
  Scalar best = f.like(0);
  if (p.slopes.size() < 2) return best;
  Scalar pref = p.slopes.front();
  for (std::size_t j = 1; j < p.slopes.size(); ++j) {
    best = max(best, pref - p.slopes[j]);
    pref = max(pref, p.slopes[j]);
  }
  return best;
}

MediantBounds mediant_bounds(const std::vector<Scalar>& numerators,
                             const std::vector<Scalar>& denominators) {
  if (numerators.empty() || numerators.size() != denominators.size())
    throw InputError("mediant needs equal-length nonempty lists");
  for (const Scalar& d : denominators)
    if (!d.gt(d.like(0))) throw InputError("mediant denominators must be positive");
  Scalar num_sum = numerators.front().like(0);
  Scalar den_sum = num_sum;
  Scalar lo = numerators.front() / denominators.front();
  Scalar hi = lo;
  for (std::size_t i = 0; i < numerators.size(); ++i) {
    Scalar ratio = numerators[i] / denominators[i];
    lo = min(lo, ratio);
    hi = max(hi, ratio);
    num_sum = num_sum + numerators[i];
    den_sum = den_sum + denominators[i];
  }
  return MediantBounds{lo, num_sum / den_sum, hi};
}

bool pl_equal(const PLFunc& a, const PLFunc& b) {
  if (a.points() != b.points()) return false;
  for (std::size_t i = 0; i < a.points(); ++i)
    if (!a.x(i).eq(b.x(i)) || !a.y(i).eq(b.y(i))) return false;
  return true;
}

PLFunc negate(const PLFunc& f) {
  std::vector<Scalar> ys;
  ys.reserve(f.points());
  for (const Scalar& y : f.ys()) ys.push_back(-y);
  return PLFunc(f.xs(), std::move(ys));
}

} // namespace approxseq
