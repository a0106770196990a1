#include "octa/scalar.hpp"

#include <cmath>
#include <cstdlib>

#include "octa/errors.hpp"

namespace octa {

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

Scalar Scalar::from_double(double v) {
  Scalar s;
  s.exact_ = false;
  s.approx_ = v;
  return s;
}

double Scalar::to_double() const {
  if (!exact_) return approx_;
  return a_.to_double() + b_.to_double() * kSqrt2;
}

bool Scalar::is_zero() const {
  if (exact_) return a_.is_zero() && b_.is_zero();
  return std::fabs(approx_) <= kFloatEps;
}

int Scalar::sign() const {
  if (!exact_) {
    if (approx_ > kFloatEps) return 1;
    if (approx_ < -kFloatEps) return -1;
    return 0;
  }
  int sa = a_.sign();
  int sb = b_.sign();
  if (sa == 0 && sb == 0) return 0;
  if (sa >= 0 && sb >= 0) return 1;
  if (sa <= 0 && sb <= 0) return -1;
  // Opposite signs: decide by comparing a^2 against 2 b^2.
  int c = (a_ * a_).compare(Rational(2) * b_ * b_);
  return sa > 0 ? c : -c;
}

Scalar Scalar::operator-() const {
  if (!exact_) return from_double(-approx_);
  return Scalar(-a_, -b_);
}

Scalar operator+(const Scalar& l, const Scalar& r) {
  if (l.exact_ && r.exact_) return Scalar(l.a_ + r.a_, l.b_ + r.b_);
  return Scalar::from_double(l.to_double() + r.to_double());
}

Scalar operator-(const Scalar& l, const Scalar& r) {
  if (l.exact_ && r.exact_) return Scalar(l.a_ - r.a_, l.b_ - r.b_);
  return Scalar::from_double(l.to_double() - r.to_double());
}

Scalar operator*(const Scalar& l, const Scalar& r) {
  if (l.exact_ && r.exact_) {
    return Scalar(l.a_ * r.a_ + Rational(2) * l.b_ * r.b_, l.a_ * r.b_ + l.b_ * r.a_);
  }
  return Scalar::from_double(l.to_double() * r.to_double());
}

Scalar operator/(const Scalar& l, const Scalar& r) {
  if (l.exact_ && r.exact_) {
    if (r.is_zero()) throw DivisionByZero("scalar division by zero");
    // Multiply by the conjugate: (c + d*sqrt2)(c - d*sqrt2) = c^2 - 2 d^2,
    // nonzero for any nonzero element of Q(sqrt2).
    Rational norm = r.a_ * r.a_ - Rational(2) * r.b_ * r.b_;
    Scalar num = l * Scalar(r.a_, -r.b_);
    return Scalar(num.a_ / norm, num.b_ / norm);
  }
  double d = r.to_double();
  if (std::fabs(d) <= kFloatEps) throw DivisionByZero("scalar division by zero");
  return Scalar::from_double(l.to_double() / d);
}

int Scalar::compare(const Scalar& r) const {
  if (exact_ && r.exact_) return (*this - r).sign();
  double d = to_double() - r.to_double();
  if (d > kFloatEps) return 1;
  if (d < -kFloatEps) return -1;
  return 0;
}

std::string Scalar::str() const {
  if (!exact_) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", approx_);
    return buf;
  }
  auto sqrt2_term = [](const Rational& b) -> std::string {
    if (b == Rational(1)) return "sqrt2";
    if (b == Rational(-1)) return "-sqrt2";
    return b.str() + "*sqrt2";
  };
  if (b_.is_zero()) return a_.str();
  if (a_.is_zero()) return sqrt2_term(b_);
  if (b_.sign() > 0) return a_.str() + "+" + sqrt2_term(b_);
  return a_.str() + "-" + sqrt2_term(-b_);
}

namespace {

// rat := ['+'|'-'] digits ['/' digits]
bool parse_rational(std::string_view& s, Rational& out) {
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) return false;
  std::int64_t num = 0;
  for (size_t k = start; k < i; ++k) {
    if (num > (INT64_MAX - 9) / 10) return false;
    num = num * 10 + (s[k] - '0');
  }
  std::int64_t den = 1;
  if (i < s.size() && s[i] == '/') {
    ++i;
    size_t dstart = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == dstart) return false;
    den = 0;
    for (size_t k = dstart; k < i; ++k) {
      if (den > (INT64_MAX - 9) / 10) return false;
      den = den * 10 + (s[k] - '0');
    }
    if (den == 0) return false;
  }
  out = Rational(neg ? -num : num, den);
  s.remove_prefix(i);
  return true;
}

// term := rat | rat '*' "sqrt2" | ['+'|'-'] "sqrt2"
bool parse_term(std::string_view& s, Rational& rat, Rational& srt) {
  std::string_view save = s;
  int sign = 1;
  std::string_view probe = s;
  if (!probe.empty() && (probe[0] == '+' || probe[0] == '-')) {
    sign = probe[0] == '-' ? -1 : 1;
    probe.remove_prefix(1);
  }
  if (probe.starts_with("sqrt2")) {
    probe.remove_prefix(5);
    s = probe;
    srt += Rational(sign);
    return true;
  }
  Rational r;
  if (!parse_rational(s, r)) {
    s = save;
    return false;
  }
  if (s.starts_with("*sqrt2")) {
    s.remove_prefix(6);
    srt += r;
  } else {
    rat += r;
  }
  return true;
}

}  // namespace

std::optional<Scalar> Scalar::parse_exact(std::string_view text) {
  Rational rat(0), srt(0);
  std::string_view s = text;
  if (!parse_term(s, rat, srt)) return std::nullopt;
  if (!s.empty()) {
    if (s[0] != '+' && s[0] != '-') return std::nullopt;
    if (!parse_term(s, rat, srt)) return std::nullopt;
  }
  if (!s.empty()) return std::nullopt;
  return Scalar(rat, srt);
}

}  // namespace octa
