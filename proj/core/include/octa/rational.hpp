#pragma once

#include <cstdint>
#include <string>

namespace octa {

/// Arbitrary fraction of machine integers, always kept reduced with a
/// positive denominator. Intermediate products run through 128-bit
/// arithmetic; results that do not fit back into 64 bits throw
/// std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

  Rational operator-() const { return Rational(-num_, den_); }
  friend Rational operator+(const Rational& l, const Rational& r);
  friend Rational operator-(const Rational& l, const Rational& r);
  friend Rational operator*(const Rational& l, const Rational& r);
  friend Rational operator/(const Rational& l, const Rational& r);
  Rational& operator+=(const Rational& r) { return *this = *this + r; }
  Rational& operator-=(const Rational& r) { return *this = *this - r; }
  Rational& operator*=(const Rational& r) { return *this = *this * r; }
  Rational& operator/=(const Rational& r) { return *this = *this / r; }

  /// Three-way comparison, exact.
  int compare(const Rational& r) const;
  bool operator==(const Rational& r) const { return num_ == r.num_ && den_ == r.den_; }
  bool operator<(const Rational& r) const { return compare(r) < 0; }
  bool operator<=(const Rational& r) const { return compare(r) <= 0; }
  bool operator>(const Rational& r) const { return compare(r) > 0; }
  bool operator>=(const Rational& r) const { return compare(r) >= 0; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace octa
