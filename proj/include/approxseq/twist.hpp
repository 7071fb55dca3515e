#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "approxseq/plfunc.hpp"

namespace approxseq {

/// The reflection g(x) = f(a + b - x) on f's domain [a, b]: breakpoints
/// mirrored about the midpoint and order-reversed, then normalized.
/// An involution: twist(twist(f)) == f.
PLFunc twist(const PLFunc& f);

/// The left derivative of twist(f) at u (the supremum of left chord
/// slopes, attained at the adjacent segment for a PL function). Requires
/// f convex and u > domain_lo. Satisfies the support inequality
/// twist(f)(u) + (x - u) * phi(u) <= twist(f)(x) for all x, and is
/// nondecreasing in u.
Scalar slope_function(const PLFunc& f, const Scalar& u);

enum class SymmetryClass { even_about_midpoint, odd_about_midpoint, none };

std::string symmetry_name(SymmetryClass s);

/// even: f equals twist(f); odd: f equals -twist(f); none otherwise.
/// The zero function classifies as even.
SymmetryClass check_symmetry(const PLFunc& f);

/// g(theta) = f(midpoint + theta): a pure abscissa shift onto the
/// interval [-(b-a)/2, (b-a)/2].
PLFunc recenter(const PLFunc& f);

/// True iff f(x) = f(x + period) whenever both points lie in the
/// domain; decided exactly by comparing at every breakpoint, every
/// in-domain breakpoint translate, and the overlap endpoints. Requires
/// 0 < period < domain length.
bool is_periodic(const PLFunc& f, const Scalar& period);

struct Thm11Violation {
  std::string condition;
  std::vector<Scalar> sample;
};

/// One boolean per condition of the five-way convexity equivalence,
/// evaluated independently. The constructor does not enforce agreement;
/// tests do.
struct Thm11Report {
  bool convex_f = false;            // (i)   f convex
  bool twist_chord_inequality = false; // (ii)  chord-slope inequality for twist(f)
  bool support_inequality = false;  // (iii) subgradient support inequality
  bool jensen_combination = false;  // (iv)  finite convex combinations
  bool convex_twist = false;        // (v)   twist(f) convex
  std::vector<Thm11Violation> violations;
  std::uint64_t seed = 0;
  int samples = 0;

  bool all() const {
    return convex_f && twist_chord_inequality && support_inequality &&
           jensen_combination && convex_twist;
  }
  bool agree() const {
    return convex_f == twist_chord_inequality && convex_f == support_inequality &&
           convex_f == jensen_combination && convex_f == convex_twist;
  }
};

/// Evaluates the five conditions: (i), (ii), (v) exactly on segment
/// slopes; (iii) at all breakpoint pairs plus sample_count seeded random
/// rational pairs; (iv) at every interior-breakpoint triple plus
/// sample_count seeded random rational convex combinations of size <= 4.
/// The first violating sample per condition is recorded.
Thm11Report verify_thm11(const PLFunc& f, int sample_count, std::uint64_t seed);

} // namespace approxseq
