#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "addvol/error.hpp"
#include "addvol/numeric.hpp"

namespace addvol {

struct Point {
  Int x;
  Int y;

  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
  bool operator<(const Point& o) const {
    return x != o.x ? x < o.x : y < o.y;
  }
  bool operator>(const Point& o) const { return o < *this; }
  bool operator<=(const Point& o) const { return !(o < *this); }
  bool operator>=(const Point& o) const { return !(*this < o); }
};

/// xy - yx determinant; the only geometric predicate this library needs.
inline Int cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Tight axis-aligned box: h1, h2 are point counts per axis, and every
/// extreme row/column of the box meets the owning set.
struct BoundingBox {
  Int a1;
  Int a2;
  Int h1;
  Int h2;

  Int point_count() const { return h1 * h2; }
  bool operator==(const BoundingBox&) const = default;
};

/// Finite set of planar lattice points. Same value semantics and lazy
/// doubling cache as Set1D.
class Set2D {
 public:
  using element = Point;

  /// The origin singleton; the smallest set the invariants allow.
  Set2D() : pts_{Point{0, 0}} {}

  explicit Set2D(std::vector<Point> pts) : pts_(std::move(pts)) {
    std::sort(pts_.begin(), pts_.end());
    if (pts_.empty()) fail(Errc::empty_set, "a set needs at least one point");
    auto dup = std::adjacent_find(pts_.begin(), pts_.end());
    if (dup != pts_.end())
      fail(Errc::duplicate_element, "repeated point (" + to_string(dup->x) +
                                        "," + to_string(dup->y) + ")");
  }

  Set2D(const Set2D& o) : pts_(o.pts_) { copy_cache(o); }
  Set2D(Set2D&& o) noexcept : pts_(std::move(o.pts_)) { copy_cache(o); }
  Set2D& operator=(const Set2D& o) {
    pts_ = o.pts_;
    copy_cache(o);
    return *this;
  }
  Set2D& operator=(Set2D&& o) noexcept {
    pts_ = std::move(o.pts_);
    copy_cache(o);
    return *this;
  }

  const std::vector<Point>& points() const { return pts_; }
  std::size_t k() const { return pts_.size(); }

  bool contains(const Point& p) const {
    return std::binary_search(pts_.begin(), pts_.end(), p);
  }

  std::size_t doubling_size() const {
    std::uint64_t cached = t_cache_.load(std::memory_order_relaxed);
    if (cached != 0) return static_cast<std::size_t>(cached);
    std::set<Point> sums;
    for (std::size_t i = 0; i < pts_.size(); ++i)
      for (std::size_t j = i; j < pts_.size(); ++j)
        sums.insert(pts_[i] + pts_[j]);
    t_cache_.store(sums.size(), std::memory_order_relaxed);
    return sums.size();
  }

  Set2D doubling() const;

  bool operator==(const Set2D& o) const { return pts_ == o.pts_; }
  bool operator!=(const Set2D& o) const { return !(*this == o); }

 private:
  void copy_cache(const Set2D& o) {
    t_cache_.store(o.t_cache_.load(std::memory_order_relaxed),
                   std::memory_order_relaxed);
  }

  std::vector<Point> pts_;
  mutable std::atomic<std::uint64_t> t_cache_{0};
};

inline Set2D sumset(const Set2D& a, const Set2D& b) {
  std::set<Point> sums;
  for (const Point& p : a.points())
    for (const Point& q : b.points()) sums.insert(p + q);
  return Set2D(std::vector<Point>(sums.begin(), sums.end()));
}

inline Set2D Set2D::doubling() const { return sumset(*this, *this); }

inline BoundingBox bounding_box(const Set2D& a) {
  Int xmin = a.points().front().x, xmax = xmin;
  Int ymin = a.points().front().y, ymax = ymin;
  for (const Point& p : a.points()) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  return BoundingBox{xmin, ymin, xmax - xmin + 1, ymax - ymin + 1};
}

inline bool collinear(const Set2D& a) {
  if (a.k() <= 2) return true;
  const Point& p0 = a.points()[0];
  const Point& p1 = a.points()[1];
  for (std::size_t i = 2; i < a.k(); ++i)
    if (cross(p0, p1, a.points()[i]) != 0) return false;
  return true;
}

}  // namespace addvol
