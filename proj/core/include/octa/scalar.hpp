#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "octa/rational.hpp"

namespace octa {

/// Comparison tolerance used whenever a value has fallen back to floating
/// point (inputs not representable in Q(sqrt 2)). All float-mode comparisons
/// in the library go through this single constant.
inline constexpr double kFloatEps = 1e-9;

/// An element of the quadratic field Q(sqrt 2), stored as a + b*sqrt(2) with
/// exact rational a, b. Arithmetic and comparisons are exact in this mode.
///
/// A Scalar built with from_double() carries only a double and flips the
/// whole expression it touches to float mode; mixed operations contaminate.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t n) : a_(n) {}  // NOLINT: implicit by design
  Scalar(Rational a) : a_(a) {}      // NOLINT
  Scalar(Rational a, Rational b) : a_(a), b_(b) {}

  static Scalar sqrt2() { return Scalar(Rational(0), Rational(1)); }
  static Scalar from_double(double v);

  bool exact() const { return exact_; }
  bool is_zero() const;
  int sign() const;

  /// Rational and sqrt2 coefficients; only meaningful in exact mode.
  const Rational& rat_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& l, const Scalar& r);
  friend Scalar operator-(const Scalar& l, const Scalar& r);
  friend Scalar operator*(const Scalar& l, const Scalar& r);
  friend Scalar operator/(const Scalar& l, const Scalar& r);
  Scalar& operator+=(const Scalar& r) { return *this = *this + r; }
  Scalar& operator-=(const Scalar& r) { return *this = *this - r; }
  Scalar& operator*=(const Scalar& r) { return *this = *this * r; }
  Scalar& operator/=(const Scalar& r) { return *this = *this / r; }

  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  /// Three-way comparison: exact when both operands are exact, within
  /// kFloatEps otherwise.
  int compare(const Scalar& r) const;
  bool operator==(const Scalar& r) const { return compare(r) == 0; }
  bool operator!=(const Scalar& r) const { return compare(r) != 0; }
  bool operator<(const Scalar& r) const { return compare(r) < 0; }
  bool operator<=(const Scalar& r) const { return compare(r) <= 0; }
  bool operator>(const Scalar& r) const { return compare(r) > 0; }
  bool operator>=(const Scalar& r) const { return compare(r) >= 0; }

  double to_double() const;

  /// Canonical text form: "0", "3", "-1/4", "sqrt2", "3/2*sqrt2",
  /// "1/4+1/2*sqrt2", "1-sqrt2". Float-mode values print as decimals.
  std::string str() const;

  /// Parses the exact grammar accepted by str(); returns nullopt for
  /// anything else (decimals are the caller's cue to use from_double).
  static std::optional<Scalar> parse_exact(std::string_view text);

 private:
  Rational a_;
  Rational b_;
  double approx_ = 0.0;
  bool exact_ = true;
};

}  // namespace octa
