#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "newtonjump/checked.hpp"
#include "newtonjump/lattice.hpp"

namespace newtonjump {

/// Raised for chains that cannot form a Newton diagram. `term_index` names
/// the offending term when the chain was built from terms.
class DiagramError : public std::invalid_argument {
 public:
  explicit DiagramError(const std::string& what, std::optional<std::size_t> term = std::nullopt)
      : std::invalid_argument(what), term_index(term) {}

  std::optional<std::size_t> term_index;
};

/// A Newton diagram: a strictly convex lattice chain stored left to right
/// (x increasing, y decreasing). The region of a diagram is the chain plus
/// the non-negative quadrant, i.e. conv(vertices) + R^2_+.
class Diagram {
 public:
  std::span<const LatticePoint> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const LatticePoint& front() const { return vertices_.front(); }
  const LatticePoint& back() const { return vertices_.back(); }

  /// Both end-points on the axes.
  bool is_convenient() const { return front().x == 0 && back().y == 0; }
  integer x_intercept() const { return back().x; }
  integer y_intercept() const { return front().y; }

  /// True when `p` lies in the region of this diagram (on or above the chain).
  bool region_contains(const LatticePoint& p) const {
    if (p.x < front().x || p.y < back().y) return false;
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
      const auto& a = vertices_[i];
      const auto& b = vertices_[i + 1];
      if (p.x >= a.x && p.x <= b.x) return cross(a, b, p) >= 0;
    }
    return true;
  }

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram& a, const Diagram& b) {
    return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                  b.vertices_.begin(), b.vertices_.end());
  }

 private:
  explicit Diagram(std::vector<LatticePoint> v) : vertices_(std::move(v)) {}

  friend inline Diagram diagram_from_vertices(std::span<const LatticePoint> points);
  friend inline Diagram diagram_from_canonical_chain(std::vector<LatticePoint> chain);

  std::vector<LatticePoint> vertices_;
};

namespace detail {

inline void check_point(const LatticePoint& p) {
  if (p.x < 0 || p.y < 0) throw DiagramError("lattice point with negative coordinate");
  if (p.x > kCoordinateBound || p.y > kCoordinateBound)
    throw DiagramError("lattice point out of supported range");
}

}  // namespace detail

/// Canonical diagram of a point set: the boundary chain of conv(points) + R^2_+.
/// Dominated points and interior collinear points are dropped.
inline Diagram diagram_from_vertices(std::span<const LatticePoint> points) {
  if (points.empty()) throw DiagramError("diagram needs at least one point");
  std::vector<LatticePoint> pts(points.begin(), points.end());
  for (const auto& p : pts) detail::check_point(p);
  std::sort(pts.begin(), pts.end());

  // Keep the staircase of minimal points: x increasing, y strictly decreasing.
  std::vector<LatticePoint> stair;
  for (const auto& p : pts) {
    if (!stair.empty() && p.y >= stair.back().y) continue;
    stair.push_back(p);
  }

  std::vector<LatticePoint> hull;
  for (const auto& p : stair) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  return Diagram(std::move(hull));
}

inline Diagram diagram_from_vertices(std::initializer_list<LatticePoint> points) {
  return diagram_from_vertices(std::span<const LatticePoint>(points.begin(), points.size()));
}

/// Wraps a chain that is already strictly convex and monotone. Used by the
/// enumerators, which build canonical chains by construction.
inline Diagram diagram_from_canonical_chain(std::vector<LatticePoint> chain) {
  if (chain.empty()) throw DiagramError("diagram needs at least one point");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    detail::check_point(chain[i]);
    if (i >= 1 && (chain[i].x <= chain[i - 1].x || chain[i].y >= chain[i - 1].y))
      throw DiagramError("chain is not monotone");
    if (i >= 2 && cross(chain[i - 2], chain[i - 1], chain[i]) <= 0)
      throw DiagramError("chain is not strictly convex");
  }
  return Diagram(std::move(chain));
}

/// Builds Q, Q + [p1,-q1], ... from `anchor` (the top-left end-point).
/// With `reversed` the listed terms are walked in reverse order, so the
/// stored chain is always steepest-first. Collinear neighbours are merged.
inline Diagram diagram_from_terms(const LatticePoint& anchor, bool reversed,
                                  std::span<const SegmentTerm> terms) {
  if (terms.empty()) throw DiagramError("term list is empty");
  detail::check_point(anchor);

  std::vector<std::size_t> order(terms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = reversed ? terms.size() - 1 - i : i;

  std::vector<LatticePoint> chain{anchor};
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t idx = order[k];
    const SegmentTerm& t = terms[idx];
    if (t.dy == 0) throw DiagramError("term produces a horizontal segment", idx);
    const LatticePoint next{checked_add(chain.back().x, t.total_dx()),
                            checked_sub(chain.back().y, t.total_dy())};
    if (next.y < 0) throw DiagramError("term leads to a negative coordinate", idx);
    if (next.x > kCoordinateBound) throw DiagramError("term leads out of supported range", idx);
    if (chain.size() >= 2) {
      const integer turn = cross(chain[chain.size() - 2], chain.back(), next);
      if (turn < 0) throw DiagramError("non-convex term sequence", idx);
      if (turn == 0) chain.pop_back();
    }
    chain.push_back(next);
  }
  return diagram_from_canonical_chain(std::move(chain));
}

inline Diagram diagram_from_terms(const LatticePoint& anchor, bool reversed,
                                  std::initializer_list<SegmentTerm> terms) {
  return diagram_from_terms(anchor, reversed, std::span<const SegmentTerm>(terms.begin(), terms.size()));
}

/// tr(p, q) with end-points (0, q) and (p, 0).
inline Diagram triangle(integer p, integer q) {
  if (p < 1 || q < 1) throw DiagramError("tr(p,q) needs p >= 1 and q >= 1");
  return diagram_from_vertices({LatticePoint{0, q}, LatticePoint{p, 0}});
}

/// Twice the area between the axes and a convenient chain (shoelace over
/// (0,0), vertices..., (0,0)).
inline integer twice_area_under(const Diagram& d) {
  if (!d.is_convenient()) throw DiagramError("area is defined for convenient diagrams only");
  const auto v = d.vertices();
  integer sum = 0;
  LatticePoint prev{0, 0};
  auto step = [&](const LatticePoint& cur) {
    sum = checked_add(sum, checked_sub(checked_mul(prev.x, cur.y), checked_mul(cur.x, prev.y)));
    prev = cur;
  };
  for (const auto& p : v) step(p);
  step(LatticePoint{0, 0});
  // The polygon is traversed clockwise.
  return -sum;
}

/// Kouchnirenko's Newton number 2S - a - b + 1 of a convenient diagram with
/// intercepts a, b >= 1.
inline integer newton_number(const Diagram& d) {
  if (!d.is_convenient()) throw DiagramError("Newton number is defined for convenient diagrams only");
  const integer a = d.x_intercept();
  const integer b = d.y_intercept();
  if (a < 1 || b < 1) throw DiagramError("Newton number needs both intercepts >= 1");
  return checked_add(checked_sub(checked_sub(twice_area_under(d), a), b), 1);
}

/// Boundary of conv(region(d) u points).
inline Diagram deform(const Diagram& d, std::span<const LatticePoint> points) {
  std::vector<LatticePoint> all(d.vertices().begin(), d.vertices().end());
  all.insert(all.end(), points.begin(), points.end());
  return diagram_from_vertices(all);
}

inline Diagram deform(const Diagram& d, std::initializer_list<LatticePoint> points) {
  return deform(d, std::span<const LatticePoint>(points.begin(), points.size()));
}

/// e <= d in the deformation order: region(e) contains region(d).
inline bool is_deformation_of(const Diagram& e, const Diagram& d) {
  return std::all_of(d.vertices().begin(), d.vertices().end(),
                     [&](const LatticePoint& v) { return e.region_contains(v); });
}

}  // namespace newtonjump
