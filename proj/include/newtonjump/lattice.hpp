#pragma once

#include <compare>
#include <ostream>
#include <stdexcept>

#include "newtonjump/checked.hpp"

namespace newtonjump {

/// Exponent pair (x, y) of a monomial x^a y^b; both components non-negative
/// once it is part of a Diagram.
struct LatticePoint {
  integer x = 0;
  integer y = 0;

  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

/// z-component of (b - a) x (c - a). Positive when a -> b -> c turns left.
inline integer cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return checked_sub(checked_mul(b.x - a.x, c.y - a.y), checked_mul(b.y - a.y, c.x - a.x));
}

/// n * tr(p, q): a step of n*p to the right and n*q down.
struct SegmentTerm {
  integer multiplicity = 1;
  integer dx = 1;
  integer dy = 0;

  SegmentTerm() = default;
  SegmentTerm(integer dx_, integer dy_) : SegmentTerm(1, dx_, dy_) {}
  SegmentTerm(integer multiplicity_, integer dx_, integer dy_)
      : multiplicity(multiplicity_), dx(dx_), dy(dy_) {
    if (multiplicity < 1) throw std::invalid_argument("segment multiplicity must be >= 1");
    if (dx < 1) throw std::invalid_argument("segment base must be >= 1");
    if (dy < 0) throw std::invalid_argument("segment height must be >= 0");
    if (dx > kCoordinateBound || dy > kCoordinateBound || multiplicity > kCoordinateBound)
      throw std::invalid_argument("segment term out of supported range");
  }

  integer total_dx() const { return checked_mul(multiplicity, dx); }
  integer total_dy() const { return checked_mul(multiplicity, dy); }

  friend bool operator==(const SegmentTerm&, const SegmentTerm&) = default;
};

inline SegmentTerm tr(integer dx, integer dy) { return SegmentTerm(dx, dy); }

}  // namespace newtonjump
