#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <variant>

#include "approxseq/errors.hpp"

namespace approxseq {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class Mode { exact, floating };

inline const char* mode_name(Mode m) {
  return m == Mode::exact ? "exact" : "float";
}

/// A number in one of two arithmetic modes.
///
/// Exact mode holds a rational kept in lowest terms with positive
/// denominator. Float mode holds a double together with a comparison
/// tolerance; ordering predicates are one-sided (a <= b means
/// a <= b + tol) while arithmetic and min/max selection are plain.
/// Mixing the two modes in one operation throws ModeError.
class Scalar {
public:
  static constexpr double kDefaultTol = 1e-9;

  Scalar() : rep_(Rational(0)) {}

  static Scalar exact(Rational r) { return Scalar(std::move(r)); }
  static Scalar exact(long long num, long long den = 1) {
    if (den == 0) throw InputError("rational denominator is zero");
    return Scalar(Rational(num, den));
  }
  static Scalar floating(double v, double tol = kDefaultTol) {
    if (!(tol >= 0.0)) throw InputError("negative comparison tolerance");
    if (!std::isfinite(v)) throw InputError("non-finite float value");
    return Scalar(Floating{v, tol});
  }

  Mode mode() const { return is_exact() ? Mode::exact : Mode::floating; }
  bool is_exact() const { return std::holds_alternative<Rational>(rep_); }

  const Rational& rational() const {
    if (!is_exact()) throw ModeError("rational() on a float-mode scalar");
    return std::get<Rational>(rep_);
  }

  /// Numeric view in either mode (exact values are converted to double).
  double value() const {
    if (is_exact()) return static_cast<double>(std::get<Rational>(rep_));
    return std::get<Floating>(rep_).v;
  }

  double tol() const { return is_exact() ? 0.0 : std::get<Floating>(rep_).tol; }

  /// A value of `v` carrying this scalar's mode (and tolerance).
  Scalar like(long long v) const {
    if (is_exact()) return exact(v);
    return floating(static_cast<double>(v), tol());
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return x + y; },
                   [](double x, double y) { return x + y; });
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return x - y; },
                   [](double x, double y) { return x - y; });
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return x * y; },
                   [](double x, double y) { return x * y; });
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero_value()) throw InputError("division by zero");
    return combine(a, b, [](const Rational& x, const Rational& y) { return x / y; },
                   [](double x, double y) { return x / y; });
  }
  Scalar operator-() const {
    if (is_exact()) return exact(-std::get<Rational>(rep_));
    const auto& f = std::get<Floating>(rep_);
    return floating(-f.v, f.tol);
  }

  friend Scalar abs(const Scalar& a) { return raw_less(a, a.like(0)) ? -a : a; }

  /// Ordering without tolerance; used for max/min selection so that
  /// argmax choices stay deterministic in both modes.
  friend bool raw_less(const Scalar& a, const Scalar& b) {
    check_modes(a, b);
    if (a.is_exact()) return std::get<Rational>(a.rep_) < std::get<Rational>(b.rep_);
    return std::get<Floating>(a.rep_).v < std::get<Floating>(b.rep_).v;
  }

  friend Scalar max(const Scalar& a, const Scalar& b) { return raw_less(a, b) ? b : a; }
  friend Scalar min(const Scalar& a, const Scalar& b) { return raw_less(b, a) ? b : a; }

  // Tolerance-aware predicates. Exact mode: plain comparisons.
  bool le(const Scalar& b) const {
    check_modes(*this, b);
    if (is_exact()) return rational() <= b.rational();
    return fv() <= b.fv() + pair_tol(b);
  }
  bool ge(const Scalar& b) const { return b.le(*this); }
  bool lt(const Scalar& b) const {
    check_modes(*this, b);
    if (is_exact()) return rational() < b.rational();
    return fv() < b.fv() - pair_tol(b);
  }
  bool gt(const Scalar& b) const { return b.lt(*this); }
  bool eq(const Scalar& b) const {
    check_modes(*this, b);
    if (is_exact()) return rational() == b.rational();
    return std::fabs(fv() - b.fv()) <= pair_tol(b);
  }

  /// "p/q" (or "p" when the denominator is 1) in exact mode, shortest
  /// decimal otherwise.
  std::string text() const;

private:
  struct Floating {
    double v;
    double tol;
  };

  explicit Scalar(Rational r) : rep_(std::move(r)) {}
  explicit Scalar(Floating f) : rep_(f) {}

  double fv() const { return std::get<Floating>(rep_).v; }
  double pair_tol(const Scalar& b) const { return std::max(tol(), b.tol()); }

  bool is_zero_value() const {
    if (is_exact()) return std::get<Rational>(rep_) == 0;
    return std::get<Floating>(rep_).v == 0.0;
  }

  static void check_modes(const Scalar& a, const Scalar& b) {
    if (a.is_exact() != b.is_exact())
      throw ModeError("exact and float scalars mixed in one computation");
  }

  template <class ExactOp, class FloatOp>
  static Scalar combine(const Scalar& a, const Scalar& b, ExactOp eop, FloatOp fop) {
    check_modes(a, b);
    if (a.is_exact())
      return Scalar(eop(std::get<Rational>(a.rep_), std::get<Rational>(b.rep_)));
    const auto& fa = std::get<Floating>(a.rep_);
    const auto& fb = std::get<Floating>(b.rep_);
    return Scalar(Floating{fop(fa.v, fb.v), std::max(fa.tol, fb.tol)});
  }

  std::variant<Rational, Floating> rep_;
};

} // namespace approxseq
