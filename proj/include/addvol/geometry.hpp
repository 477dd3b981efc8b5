#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "addvol/affine.hpp"
#include "addvol/error.hpp"
#include "addvol/morphisms.hpp"
#include "addvol/numeric.hpp"
#include "addvol/set1d.hpp"
#include "addvol/set2d.hpp"

namespace addvol {

/// 1D volume: length of the containing segment after normalization,
/// max(normalize(A)) + 1.
inline Int volume_1d(const Set1D& a) { return normalize(a).max() + 1; }

/// Counter-clockwise convex hull (monotone chain). Collinear input yields the
/// two extreme points; a single point yields itself.
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<Point> h(2 * n);
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (m >= 2 && cross(h[m - 2], h[m - 1], pts[i]) <= 0) --m;
    h[m++] = pts[i];
  }
  for (std::size_t i = n - 1, lower = m + 1; i-- > 0;) {
    while (m >= lower && cross(h[m - 2], h[m - 1], pts[i]) <= 0) --m;
    h[m++] = pts[i];
  }
  h.resize(m - 1);
  if (h.size() < 3) return {pts.front(), pts.back()};
  return h;
}

/// Membership (interior or boundary) via sign-of-determinant tests only.
inline bool in_hull(const std::vector<Point>& hull, const Point& p) {
  if (hull.size() == 1) return p == hull[0];
  if (hull.size() == 2) {
    if (cross(hull[0], hull[1], p) != 0) return false;
    return std::min(hull[0].x, hull[1].x) <= p.x &&
           p.x <= std::max(hull[0].x, hull[1].x) &&
           std::min(hull[0].y, hull[1].y) <= p.y &&
           p.y <= std::max(hull[0].y, hull[1].y);
  }
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& a = hull[i];
    const Point& b = hull[(i + 1) % hull.size()];
    if (cross(a, b, p) < 0) return false;
  }
  return true;
}

/// Number of lattice points inside or on the convex hull of A, by a
/// bounding-box membership scan. This is the volume of the given embedding;
/// minimization over isomorphic images is a search-module concern.
inline Int hull_lattice_count(const Set2D& a) {
  const std::vector<Point> hull = convex_hull(a.points());
  const BoundingBox box = bounding_box(a);
  Int count = 0;
  for (Int x = box.a1; x < box.a1 + box.h1; ++x)
    for (Int y = box.a2; y < box.a2 + box.h2; ++y)
      if (in_hull(hull, Point{x, y})) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// Strip forms
// ---------------------------------------------------------------------------

/// A set placed in a horizontal strip: rows y = 0 and y = h2-1 are occupied,
/// the box is tight, and `transform` is the integral unimodular affine map
/// that produced `set` from the original input.
struct StripForm {
  Set2D set;
  BoundingBox box;
  RatAffineMap2D transform;
  bool reflected_x = false;
  bool reflected_y = false;

  Pairing2D pairing(const Set2D& original) const {
    Pairing2D phi;
    phi.pairs.reserve(original.k());
    for (const Point& p : original.points())
      phi.pairs.push_back({p, transform.apply_int(p)});
    return phi;
  }
};

struct StripColumn {
  Int x;
  Int y_min;
  Int y_max;
};

struct DeltaPair {
  Int dx;  // x_{i+1} - x_i, always >= 1
  Int dy;  // y_{i+1,max} - y_{i,min}, the post-reflection orientation
};

/// Column statistics of a strip: consecutive-column gaps, the slope ratios
/// tau = min dx/(dy + h2 - 1), the index i0 attaining tau among dx = 1 pairs,
/// and y0, the top of the column adjacent to a full-height boundary column.
struct DeltaProfile {
  std::vector<StripColumn> columns;
  std::vector<DeltaPair> deltas;
  std::optional<Rat> tau;
  std::optional<std::size_t> i0;
  std::optional<Int> y0;
};

inline DeltaProfile column_deltas(const StripForm& s) {
  DeltaProfile prof;
  for (const Point& p : s.set.points()) {
    if (!prof.columns.empty() && prof.columns.back().x == p.x) {
      StripColumn& c = prof.columns.back();
      c.y_min = std::min(c.y_min, p.y);
      c.y_max = std::max(c.y_max, p.y);
    } else {
      prof.columns.push_back({p.x, p.y, p.y});
    }
  }
  const Int height = s.box.h2 - 1;
  for (std::size_t i = 0; i + 1 < prof.columns.size(); ++i) {
    prof.deltas.push_back({prof.columns[i + 1].x - prof.columns[i].x,
                           prof.columns[i + 1].y_max - prof.columns[i].y_min});
  }
  for (std::size_t i = 0; i < prof.deltas.size(); ++i) {
    const Int den = prof.deltas[i].dy + height;
    if (den <= 0) continue;
    Rat ratio(prof.deltas[i].dx, den);
    if (!prof.tau || ratio < *prof.tau) prof.tau = ratio;
    if (prof.deltas[i].dx == 1) {
      if (!prof.i0) {
        prof.i0 = i;
      } else {
        const Int den0 = prof.deltas[*prof.i0].dy + height;
        if (ratio < Rat(prof.deltas[*prof.i0].dx, den0)) prof.i0 = i;
      }
    }
  }
  for (std::size_t i = 0; i < prof.columns.size(); ++i) {
    if (prof.columns[i].y_min == 0 && prof.columns[i].y_max == height &&
        i + 1 < prof.columns.size()) {
      prof.y0 = prof.columns[i + 1].y_max;
      break;
    }
  }
  if (!prof.y0 && prof.columns.size() >= 2) prof.y0 = prof.columns[1].y_max;
  return prof;
}

namespace detail {

/// Extended gcd: returns (g, u, v) with a*u + b*v = g, g >= 0.
inline std::tuple<Int, Int, Int> egcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_u = 1, u = 0;
  Int old_v = 0, v = 1;
  while (r != 0) {
    Int q = old_r / r;  // truncating division is fine for the invariant
    old_r -= q * r;
    std::swap(old_r, r);
    old_u -= q * u;
    std::swap(old_u, u);
    old_v -= q * v;
    std::swap(old_v, v);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_u = -old_u;
    old_v = -old_v;
  }
  return {old_r, old_u, old_v};
}

inline RatAffineMap2D linear_map(const Int& m11, const Int& m12,
                                 const Int& m21, const Int& m22) {
  return {Rat(m11), Rat(m12), Rat(m21), Rat(m22), 0, 0};
}

/// Applies an integral affine map and translates so mins land on
/// (x_shift_to, 0). Returns the strip and the full transform used.
inline StripForm place_strip(const Set2D& original, RatAffineMap2D linear,
                             bool rx, bool ry) {
  if (rx) linear = linear.then(RatAffineMap2D::reflect_x());
  if (ry) linear = linear.then(RatAffineMap2D::reflect_y());
  std::vector<Point> img;
  img.reserve(original.k());
  for (const Point& p : original.points()) img.push_back(linear.apply_int(p));
  Int xmin = img[0].x, ymin = img[0].y;
  for (const Point& p : img) {
    xmin = std::min(xmin, p.x);
    ymin = std::min(ymin, p.y);
  }
  for (Point& p : img) {
    p.x -= xmin;
    p.y -= ymin;
  }
  RatAffineMap2D full =
      linear.then(RatAffineMap2D::translation(Rat(-xmin), Rat(-ymin)));
  Set2D image(std::move(img));
  BoundingBox box = bounding_box(image);
  return StripForm{std::move(image), box, full, rx, ry};
}

/// Integer shear t minimizing the x-extent of {x + t*y}; walk-downhill on a
/// convex function, preferring the minimizer closest to zero.
inline Int best_shear(const std::vector<Point>& pts) {
  auto extent = [&](const Int& t) {
    Int lo = pts[0].x + t * pts[0].y, hi = lo;
    for (const Point& p : pts) {
      Int v = p.x + t * p.y;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    return hi - lo;
  };
  Int t = 0, f = extent(0);
  Int step = 0;
  if (extent(1) < f)
    step = 1;
  else if (extent(-1) < f)
    step = -1;
  while (step != 0) {
    Int f_next = extent(t + step);
    if (f_next >= f) break;
    t += step;
    f = f_next;
  }
  return t;
}

}  // namespace detail

/// Unimodular-affine strip form with h2 minimal over a bounded search of
/// primitive direction vectors |p|,|q| <= max(h1,h2) of the initial box.
/// Reflections are chosen to maximize dy at the tau-minimizing dx = 1 pair,
/// the orientation the projection step wants.
inline StripForm strip_normalize(const Set2D& a) {
  if (collinear(a)) fail(Errc::collinear, "strip form needs a planar set");
  const BoundingBox init = bounding_box(a);
  const Int bound = std::max(init.h1, init.h2);

  // Direction (p,q) gives strip width = extent of (-q*x + p*y). Candidates
  // are enumerated in a fixed order so ties resolve deterministically, with
  // the two axis directions first.
  std::optional<Int> best_width;
  Int bp = 1, bq = 0;
  auto consider = [&](const Int& p, const Int& q) {
    if (gcd_int(p, q) != 1) return;
    Int lo = -q * a.points()[0].x + p * a.points()[0].y, hi = lo;
    for (const Point& pt : a.points()) {
      Int v = -q * pt.x + p * pt.y;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    Int width = hi - lo + 1;
    if (!best_width || width < *best_width) {
      best_width = width;
      bp = p;
      bq = q;
    }
  };
  consider(1, 0);
  consider(0, 1);
  for (Int n = 1; n <= bound; ++n) {
    for (Int p = 0; p <= n; ++p) {
      for (const Int& q : {Int(n), Int(-n)}) {
        if (std::max(p, abs_int(q)) == n && !(p == 0 && q < 0) &&
            !(p == 1 && q == 0) && !(p == 0 && q == 1))
          consider(p, q);
      }
    }
    for (Int q = -n + 1; q <= n - 1; ++q) {
      if (!(n == 1 && q == 0)) consider(n, q);
    }
  }

  // Send (bp,bq) to the x-axis: rows (u,v) / (-bq,bp), u*bp + v*bq = 1.
  // Among the Bezout solutions (u + s*bq, v - s*bp) pick the one with v in
  // (-bp/2, bp/2], which keeps the new x close to the old one.
  auto [g, u, v] = detail::egcd(bp, bq);
  if (bp != 0) {
    Int v_res = v % bp;
    if (v_res < 0) v_res += bp;
    if (2 * v_res > bp) v_res -= bp;
    u += ((v - v_res) / bp) * bq;
    v = v_res;
  }
  RatAffineMap2D lin = detail::linear_map(u, v, -bq, bp);
  {
    std::vector<Point> img;
    img.reserve(a.k());
    for (const Point& p : a.points()) img.push_back(lin.apply_int(p));
    Int t = detail::best_shear(img);
    lin = lin.then(detail::linear_map(1, t, 0, 1));
  }
  StripForm s = detail::place_strip(a, lin, false, false);
  if (s.box.h1 < s.box.h2) {
    lin = lin.then(RatAffineMap2D::transpose());
    std::vector<Point> img;
    img.reserve(a.k());
    for (const Point& p : a.points()) img.push_back(lin.apply_int(p));
    Int t = detail::best_shear(img);
    lin = lin.then(detail::linear_map(1, t, 0, 1));
    s = detail::place_strip(a, lin, false, false);
  }

  // Reflection choice: largest dy at i0 wins; ties prefer no reflection.
  std::optional<Int> best_dy;
  StripForm best = s;
  for (auto [rx, ry] : {std::pair{false, false}, std::pair{false, true},
                        std::pair{true, false}, std::pair{true, true}}) {
    StripForm cand = detail::place_strip(a, lin, rx, ry);
    DeltaProfile prof = column_deltas(cand);
    Int dy = prof.i0 ? prof.deltas[*prof.i0].dy : Int(-init.h2 - 1);
    if (!best_dy || dy > *best_dy) {
      best_dy = dy;
      best = std::move(cand);
    }
  }
  return best;
}

}  // namespace addvol
