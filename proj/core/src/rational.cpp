#include "octa/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "octa/errors.hpp"

namespace octa {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational overflow");
  }
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make(i128 n, i128 d) {
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational(narrow(n), narrow(d));
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  Rational r = make(n, d);
  num_ = r.num_;
  den_ = r.den_;
}

Rational operator+(const Rational& l, const Rational& r) {
  return make(i128(l.num_) * r.den_ + i128(r.num_) * l.den_, i128(l.den_) * r.den_);
}

Rational operator-(const Rational& l, const Rational& r) {
  return make(i128(l.num_) * r.den_ - i128(r.num_) * l.den_, i128(l.den_) * r.den_);
}

Rational operator*(const Rational& l, const Rational& r) {
  return make(i128(l.num_) * r.num_, i128(l.den_) * r.den_);
}

Rational operator/(const Rational& l, const Rational& r) {
  if (r.num_ == 0) throw DivisionByZero("rational division by zero");
  return make(i128(l.num_) * r.den_, i128(l.den_) * r.num_);
}

int Rational::compare(const Rational& r) const {
  i128 lhs = i128(num_) * r.den_;
  i128 rhs = i128(r.num_) * den_;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace octa
