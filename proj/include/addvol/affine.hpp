#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "addvol/error.hpp"
#include "addvol/numeric.hpp"
#include "addvol/set2d.hpp"

namespace addvol {

struct RatPoint {
  Rat x;
  Rat y;
  bool operator==(const RatPoint& o) const { return x == o.x && y == o.y; }
  bool operator!=(const RatPoint& o) const { return !(*this == o); }
  bool operator<(const RatPoint& o) const {
    return x != o.x ? x < o.x : y < o.y;
  }
};

/// Exact rational affine map of the plane: p -> M p + t. Projections
/// (rank-1 M) are legal; rational intermediate images are legal too.
struct RatAffineMap2D {
  Rat m11, m12, m21, m22;
  Rat t1, t2;

  static RatAffineMap2D identity() { return {1, 0, 0, 1, 0, 0}; }
  static RatAffineMap2D diag(const Rat& sx, const Rat& sy) {
    return {sx, 0, 0, sy, 0, 0};
  }
  static RatAffineMap2D translation(const Rat& tx, const Rat& ty) {
    return {1, 0, 0, 1, tx, ty};
  }
  /// (x, y) -> (0, y - m x): projection onto the line x = 0 parallel to the
  /// vector (1, m).
  static RatAffineMap2D projection_along(const Int& m) {
    return {0, 0, Rat(-m), 1, 0, 0};
  }
  static RatAffineMap2D reflect_x() { return {-1, 0, 0, 1, 0, 0}; }
  static RatAffineMap2D reflect_y() { return {1, 0, 0, -1, 0, 0}; }
  static RatAffineMap2D transpose() { return {0, 1, 1, 0, 0, 0}; }

  RatPoint apply(const RatPoint& p) const {
    return {m11 * p.x + m12 * p.y + t1, m21 * p.x + m22 * p.y + t2};
  }
  RatPoint apply(const Point& p) const { return apply(RatPoint{Rat(p.x), Rat(p.y)}); }

  Rat det() const { return m11 * m22 - m12 * m21; }
  bool invertible() const { return det() != 0; }

  bool integral() const {
    for (const Rat* v : {&m11, &m12, &m21, &m22, &t1, &t2})
      if (boost::multiprecision::denominator(*v) != 1) return false;
    return true;
  }

  bool unimodular() const {
    Rat d = det();
    return integral() && (d == 1 || d == -1);
  }

  /// Composition "this first, then next".
  RatAffineMap2D then(const RatAffineMap2D& n) const {
    return {n.m11 * m11 + n.m12 * m21, n.m11 * m12 + n.m12 * m22,
            n.m21 * m11 + n.m22 * m21, n.m21 * m12 + n.m22 * m22,
            n.m11 * t1 + n.m12 * t2 + n.t1,
            n.m21 * t1 + n.m22 * t2 + n.t2};
  }

  Point apply_int(const Point& p) const {
    RatPoint q = apply(p);
    return {boost::multiprecision::numerator(q.x),
            boost::multiprecision::numerator(q.y)};
  }
};

/// Image of a set under a rational affine map: exact rational points,
/// deduplicated, with an integrality flag.
struct RatImage {
  std::vector<RatPoint> points;
  bool integral = false;

  Set2D to_set2d() const {
    if (!integral)
      fail(Errc::not_integral, "image has non-integer coordinates");
    std::vector<Point> v;
    v.reserve(points.size());
    for (const RatPoint& p : points)
      v.push_back({boost::multiprecision::numerator(p.x),
                   boost::multiprecision::numerator(p.y)});
    return Set2D(std::move(v));
  }

  /// y-coordinates (for images living on the line x = 0).
  std::vector<Rat> y_values() const {
    std::vector<Rat> v;
    v.reserve(points.size());
    for (const RatPoint& p : points) v.push_back(p.y);
    return v;
  }
};

namespace detail {

inline RatImage make_image(std::vector<RatPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  bool integral = true;
  for (const RatPoint& p : pts)
    if (boost::multiprecision::denominator(p.x) != 1 ||
        boost::multiprecision::denominator(p.y) != 1) {
      integral = false;
      break;
    }
  return RatImage{std::move(pts), integral};
}

}  // namespace detail

inline RatImage apply_affine(const Set2D& a, const RatAffineMap2D& m) {
  std::vector<RatPoint> pts;
  pts.reserve(a.k());
  for (const Point& p : a.points()) pts.push_back(m.apply(p));
  return detail::make_image(std::move(pts));
}

inline RatImage apply_affine(const RatImage& a, const RatAffineMap2D& m) {
  std::vector<RatPoint> pts;
  pts.reserve(a.points.size());
  for (const RatPoint& p : a.points) pts.push_back(m.apply(p));
  return detail::make_image(std::move(pts));
}

}  // namespace addvol
