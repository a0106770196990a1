#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>

namespace octa {

/// Tile edge directions v_k = e^(i k pi/4), k = 1..4 (45, 90, 135, 180
/// degrees). Squares are the pairs (1,3) and (2,4); the other four pairs are
/// the 45-degree rhombi.
inline std::array<double, 2> tile_direction(int k) {
  static const double s = 0.70710678118654752440;
  switch (k) {
    case 1: return {s, s};
    case 2: return {0.0, 1.0};
    case 3: return {-s, s};
    default: return {-1.0, 0.0};
  }
}

/// Ordered pair of axes 1 <= i < j <= 4 identifying one of the six tile
/// shapes.
struct AxisPair {
  std::int8_t i = 1;
  std::int8_t j = 2;

  bool is_square() const { return (i == 1 && j == 3) || (i == 2 && j == 4); }
  bool operator==(const AxisPair&) const = default;
  auto operator<=>(const AxisPair&) const = default;
  std::string str() const { return std::to_string(i) + std::to_string(j); }
};

/// The six pairs in the fixed order 12, 13, 14, 23, 24, 34 used everywhere a
/// Grassmann tuple or census is laid out.
inline constexpr std::array<AxisPair, 6> kAxisPairs = {
    AxisPair{1, 2}, AxisPair{1, 3}, AxisPair{1, 4},
    AxisPair{2, 3}, AxisPair{2, 4}, AxisPair{3, 4}};

inline int axis_pair_index(AxisPair p) {
  for (int n = 0; n < 6; ++n) {
    if (kAxisPairs[n] == p) return n;
  }
  return -1;
}

/// Lattice point of Z^4.
using Lat4 = std::array<int, 4>;

inline Lat4 operator+(const Lat4& a, const Lat4& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
inline Lat4 operator-(const Lat4& a, const Lat4& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

/// Unit lattice vector along 1-based axis k.
inline Lat4 lat_unit(int k) {
  Lat4 u{0, 0, 0, 0};
  u[k - 1] = 1;
  return u;
}

struct Lat4Hash {
  std::size_t operator()(const Lat4& v) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (int c : v) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(c)) + 0x9e3779b97f4a7c15ull +
           (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace octa
