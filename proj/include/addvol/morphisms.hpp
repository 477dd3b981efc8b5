#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "addvol/error.hpp"
#include "addvol/set1d.hpp"
#include "addvol/set2d.hpp"

namespace addvol {

/// A map between two finite sets, given pointwise. Source and target carriers
/// may differ in kind (Z or Z^2); the additive structure is all that matters.
template <class S, class D>
struct Pairing {
  std::vector<std::pair<S, D>> pairs;

  std::vector<S> sources() const {
    std::vector<S> v;
    v.reserve(pairs.size());
    for (const auto& p : pairs) v.push_back(p.first);
    return v;
  }
  std::vector<D> targets() const {
    std::vector<D> v;
    v.reserve(pairs.size());
    for (const auto& p : pairs) v.push_back(p.second);
    return v;
  }

  Pairing<D, S> inverse() const {
    Pairing<D, S> inv;
    inv.pairs.reserve(pairs.size());
    for (const auto& p : pairs) inv.pairs.push_back({p.second, p.first});
    return inv;
  }
};

using Pairing1D = Pairing<Int, Int>;
using Pairing2D = Pairing<Point, Point>;
using Pairing2D1D = Pairing<Point, Int>;

namespace detail {

template <class SetT, class Elem>
bool set_has(const SetT& s, const Elem& e) {
  return s.contains(e);
}

}  // namespace detail

/// Throws MAP_NOT_TOTAL unless phi assigns every element of a exactly once
/// and every target lies in b.
template <class SetA, class SetB>
void validate_total(const SetA& a, const SetB& b,
                    const Pairing<typename SetA::element,
                                  typename SetB::element>& phi) {
  auto src = phi.sources();
  std::sort(src.begin(), src.end());
  if (std::adjacent_find(src.begin(), src.end()) != src.end())
    fail(Errc::map_not_total, "map assigns some element twice");
  if (src.size() != a.k())
    fail(Errc::map_not_total, "map does not cover the source set");
  for (const auto& e : src)
    if (!detail::set_has(a, e))
      fail(Errc::map_not_total, "map source outside the declared set");
  for (const auto& p : phi.pairs)
    if (!detail::set_has(b, p.second))
      fail(Errc::map_not_total, "map target outside the declared set");
}

namespace detail {

// phi preserves additive coincidences forward iff, grouping unordered index
// pairs by source sum, every group has a single image sum. Equivalent to the
// quadruple condition, k^2 log k instead of k^4.
template <class S, class D>
bool pairs_are_homomorphism(const std::vector<std::pair<S, D>>& pairs) {
  std::map<S, D> image_sum;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i; j < pairs.size(); ++j) {
      S s = pairs[i].first + pairs[j].first;
      D d = pairs[i].second + pairs[j].second;
      auto [it, inserted] = image_sum.insert({s, d});
      if (!inserted && it->second != d) return false;
    }
  }
  return true;
}

}  // namespace detail

template <class SetA, class SetB>
bool check_homomorphism(const SetA& a, const SetB& b,
                        const Pairing<typename SetA::element,
                                      typename SetB::element>& phi) {
  validate_total(a, b, phi);
  return detail::pairs_are_homomorphism(phi.pairs);
}

/// Freiman isomorphism of order 2: a bijection whose coincidence condition
/// holds in both directions.
template <class SetA, class SetB>
bool check_isomorphism(const SetA& a, const SetB& b,
                       const Pairing<typename SetA::element,
                                     typename SetB::element>& phi) {
  validate_total(a, b, phi);
  auto dst = phi.targets();
  std::sort(dst.begin(), dst.end());
  if (std::adjacent_find(dst.begin(), dst.end()) != dst.end()) return false;
  if (dst.size() != b.k()) return false;
  return detail::pairs_are_homomorphism(phi.pairs) &&
         detail::pairs_are_homomorphism(phi.inverse().pairs);
}

/// The affine pairing x -> scale*x + shift, an isomorphism onto its image.
inline Pairing1D affine_pairing(const Set1D& a, const Int& scale,
                                const Int& shift) {
  Pairing1D phi;
  phi.pairs.reserve(a.k());
  for (const Int& x : a.elements()) phi.pairs.push_back({x, scale * x + shift});
  return phi;
}

inline Pairing1D identity_pairing(const Set1D& a) {
  return affine_pairing(a, 1, 0);
}

}  // namespace addvol
