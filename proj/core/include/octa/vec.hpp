#pragma once

#include <array>

#include "octa/axes.hpp"
#include "octa/scalar.hpp"

namespace octa {

/// Exact 2-vector (coordinates in a plane chart).
struct Vec2s {
  Scalar x;
  Scalar y;

  Vec2s operator+(const Vec2s& o) const { return {x + o.x, y + o.y}; }
  Vec2s operator-(const Vec2s& o) const { return {x - o.x, y - o.y}; }
  Vec2s operator-() const { return {-x, -y}; }
  Vec2s scaled(const Scalar& s) const { return {x * s, y * s}; }
  bool operator==(const Vec2s& o) const { return x == o.x && y == o.y; }
};

inline Scalar dot(const Vec2s& a, const Vec2s& b) { return a.x * b.x + a.y * b.y; }
inline Scalar cross(const Vec2s& a, const Vec2s& b) { return a.x * b.y - a.y * b.x; }

/// Exact 4-vector (basis vectors of planes in R^4).
using Vec4s = std::array<Scalar, 4>;

inline Scalar dot(const Vec4s& a, const Vec4s& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

inline Scalar dot(const Vec4s& a, const Lat4& x) {
  return a[0] * Scalar(x[0]) + a[1] * Scalar(x[1]) + a[2] * Scalar(x[2]) + a[3] * Scalar(x[3]);
}

inline Vec4s vec4(Scalar a, Scalar b, Scalar c, Scalar d) {
  return Vec4s{std::move(a), std::move(b), std::move(c), std::move(d)};
}

}  // namespace octa
