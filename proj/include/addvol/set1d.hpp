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

/// Finite set of integers, the 1D carrier of everything in this library.
/// Immutable after construction; the doubling cardinality T = |A+A| is
/// computed on first use and cached (idempotent, so the lock-free cache is
/// safe to race on).
class Set1D {
 public:
  using element = Int;

  /// The zero singleton; the smallest set the invariants allow.
  Set1D() : elems_{Int(0)} {}

  explicit Set1D(std::vector<Int> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    if (elems_.empty()) fail(Errc::empty_set, "a set needs at least one element");
    auto dup = std::adjacent_find(elems_.begin(), elems_.end());
    if (dup != elems_.end())
      fail(Errc::duplicate_element, "repeated element " + to_string(*dup));
  }

  Set1D(const Set1D& o) : elems_(o.elems_) { copy_cache(o); }
  Set1D(Set1D&& o) noexcept : elems_(std::move(o.elems_)) { copy_cache(o); }
  Set1D& operator=(const Set1D& o) {
    elems_ = o.elems_;
    copy_cache(o);
    return *this;
  }
  Set1D& operator=(Set1D&& o) noexcept {
    elems_ = std::move(o.elems_);
    copy_cache(o);
    return *this;
  }

  const std::vector<Int>& elements() const { return elems_; }
  std::size_t k() const { return elems_.size(); }
  const Int& min() const { return elems_.front(); }
  const Int& max() const { return elems_.back(); }

  bool contains(const Int& v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
  }

  /// T = |A+A|.
  std::size_t doubling_size() const {
    std::uint64_t cached = t_cache_.load(std::memory_order_relaxed);
    if (cached != 0) return static_cast<std::size_t>(cached);
    std::set<Int> sums;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      for (std::size_t j = i; j < elems_.size(); ++j)
        sums.insert(elems_[i] + elems_[j]);
    t_cache_.store(sums.size(), std::memory_order_relaxed);
    return sums.size();
  }

  Set1D doubling() const;

  bool operator==(const Set1D& o) const { return elems_ == o.elems_; }
  bool operator!=(const Set1D& o) const { return !(*this == o); }

 private:
  void copy_cache(const Set1D& o) {
    t_cache_.store(o.t_cache_.load(std::memory_order_relaxed),
                   std::memory_order_relaxed);
  }

  std::vector<Int> elems_;
  mutable std::atomic<std::uint64_t> t_cache_{0};  // 0 = not yet computed
};

inline Set1D sumset(const Set1D& a, const Set1D& b) {
  std::set<Int> sums;
  for (const Int& x : a.elements())
    for (const Int& y : b.elements()) sums.insert(x + y);
  return Set1D(std::vector<Int>(sums.begin(), sums.end()));
}

inline Set1D Set1D::doubling() const { return sumset(*this, *this); }

inline Set1D translate(const Set1D& a, const Int& t) {
  std::vector<Int> v;
  v.reserve(a.k());
  for (const Int& x : a.elements()) v.push_back(x + t);
  return Set1D(std::move(v));
}

/// Normal form: minimum shifted to 0, then divided by the gcd of the
/// elements. The result is an affine (hence Freiman-isomorphic) image.
inline Set1D normalize(const Set1D& a) {
  std::vector<Int> v;
  v.reserve(a.k());
  for (const Int& x : a.elements()) v.push_back(x - a.min());
  Int g = 0;
  for (const Int& x : v) g = gcd_int(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
  return Set1D(std::move(v));
}

}  // namespace addvol
