#pragma once

#include <algorithm>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "addvol/error.hpp"
#include "addvol/geometry.hpp"
#include "addvol/morphisms.hpp"
#include "addvol/numeric.hpp"
#include "addvol/relations.hpp"
#include "addvol/set1d.hpp"
#include "addvol/set2d.hpp"

namespace addvol {

/// Hard limits for the exhaustive oracles. Exceeding a limit raises
/// BUDGET_EXCEEDED; searches never truncate silently.
struct SearchBudget {
  std::int64_t max_length = 64;
  std::int64_t max_k = 7;
  std::uint64_t max_nodes = 100'000'000;
};

namespace detail {

// Enumeration works on small nonnegative integers so partial doublings can
// live in fixed bitsets; 250 is far beyond desk scale.
constexpr std::int64_t kMaxScanLength = 250;
using ElemBits = std::bitset<2 * kMaxScanLength + 2>;

struct NodeCounter {
  std::uint64_t used = 0;
  std::uint64_t limit = 0;
  void tick() {
    if (++used > limit)
      fail(Errc::budget_exceeded,
           "node limit " + std::to_string(limit) + " exhausted");
  }
};

inline std::size_t bitset_doubling(const std::vector<int>& elems) {
  ElemBits bits, sums;
  for (int e : elems) bits.set(static_cast<std::size_t>(e));
  for (int e : elems) sums |= bits << static_cast<std::size_t>(e);
  return sums.count();
}

// Depth-first extension of {0, mids..., top}: partial doubling only grows,
// so exceeding the target prunes the subtree. Calls fn on every normal-form
// witness with the given top element and doubling count.
template <class Fn>
struct AmScan {
  int k = 0;
  std::size_t target_t = 0;
  int top = 0;
  NodeCounter* nodes = nullptr;
  Fn* fn = nullptr;

  void extend(ElemBits& elems, ElemBits& sums, std::vector<int>& chosen,
              int next_min) {
    nodes->tick();
    if (static_cast<int>(chosen.size()) == k) {
      std::int64_t g = 0;
      for (int e : chosen) g = std::gcd(g, static_cast<std::int64_t>(e));
      if (g == 1 && sums.count() == target_t) {
        std::vector<int> sorted = chosen;
        std::sort(sorted.begin(), sorted.end());
        (*fn)(sorted);
      }
      return;
    }
    const int remaining = k - static_cast<int>(chosen.size());
    for (int e = next_min; e <= top - remaining; ++e) {
      ElemBits new_sums = (elems << static_cast<std::size_t>(e));
      new_sums.set(static_cast<std::size_t>(2 * e));
      ElemBits merged = sums | new_sums;
      if (merged.count() > target_t) continue;
      elems.set(static_cast<std::size_t>(e));
      chosen.push_back(e);
      extend(elems, merged, chosen, e + 1);
      chosen.pop_back();
      elems.reset(static_cast<std::size_t>(e));
    }
  }

  void scan_top(int top_elem) {
    top = top_elem;
    ElemBits elems, sums;
    elems.set(0);
    elems.set(static_cast<std::size_t>(top));
    sums.set(0);
    sums.set(static_cast<std::size_t>(top));
    sums.set(static_cast<std::size_t>(2 * top));
    if (sums.count() > target_t) return;
    std::vector<int> chosen = {0, top};
    extend(elems, sums, chosen, 1);
  }
};

template <class Fn>
void for_each_witness(int k, std::size_t target_t, int top,
                      NodeCounter& nodes, Fn&& fn) {
  AmScan<std::decay_t<Fn>> scan;
  scan.k = k;
  scan.target_t = target_t;
  scan.nodes = &nodes;
  scan.fn = &fn;
  scan.scan_top(top);
}

}  // namespace detail

inline const std::vector<Int>& set_elements(const Set1D& s) {
  return s.elements();
}
inline const std::vector<Point>& set_elements(const Set2D& s) {
  return s.points();
}

/// Backtracking bijection search with two-sided sum-consistency pruning.
/// Returns the first witnessing isomorphism in lexicographic assignment
/// order, or nullopt after exhausting all bijections.
template <class SetA, class SetB>
std::optional<Pairing<typename SetA::element, typename SetB::element>>
exists_isomorphism(const SetA& a, const SetB& b,
                   const SearchBudget& budget = {}) {
  using S = typename SetA::element;
  using D = typename SetB::element;
  if (a.k() != b.k())
    fail(Errc::params_out_of_range, "sets must have equal cardinality");

  const auto& src = set_elements(a);
  const auto& dst = set_elements(b);
  const std::size_t n = src.size();
  std::vector<std::size_t> assign(n);
  std::vector<bool> used(n, false);
  std::map<S, D> fwd;
  std::map<D, S> bwd;
  detail::NodeCounter nodes{0, budget.max_nodes};

  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t]) continue;
      nodes.tick();
      std::vector<std::pair<S, D>> fwd_added;
      std::vector<std::pair<D, S>> bwd_added;
      bool ok = true;
      for (std::size_t j = 0; j <= i && ok; ++j) {
        const std::size_t tj = (j == i) ? t : assign[j];
        S s = src[j] + src[i];
        D d = dst[tj] + dst[t];
        auto [fit, fnew] = fwd.insert({s, d});
        if (fnew)
          fwd_added.push_back({s, d});
        else if (fit->second != d)
          ok = false;
        if (ok) {
          auto [bit, bnew] = bwd.insert({d, s});
          if (bnew)
            bwd_added.push_back({d, s});
          else if (bit->second != s)
            ok = false;
        }
      }
      if (ok) {
        assign[i] = t;
        used[t] = true;
        if (self(self, i + 1)) return true;
        used[t] = false;
      }
      for (auto& kv : fwd_added) fwd.erase(kv.first);
      for (auto& kv : bwd_added) bwd.erase(kv.first);
    }
    return false;
  };

  if (!search(search, 0)) return std::nullopt;
  Pairing<S, D> phi;
  phi.pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    phi.pairs.push_back({src[i], dst[assign[i]]});
  return phi;
}

namespace detail {

/// Shortest normal-form isomorphic image of `base` (which must itself be in
/// normal form) with top element at most top_bound. Scans segment endpoints
/// upward, filtering candidates by doubling count before the bijection
/// search. Always terminates: base is its own witness at its own top.
inline std::pair<int, Set1D> min_iso_image(const Set1D& base, int top_bound,
                                           NodeCounter& nodes,
                                           const SearchBudget& budget) {
  const std::size_t t = base.doubling_size();
  const int k = static_cast<int>(base.k());
  if (k == 1) return {0, base};
  for (int top = k - 1; top <= top_bound; ++top) {
    std::optional<Set1D> found;
    auto probe = [&](const std::vector<int>& elems) {
      if (found) return;
      std::vector<Int> v(elems.begin(), elems.end());
      Set1D cand(std::move(v));
      if (exists_isomorphism(base, cand, budget)) found = cand;
    };
    for_each_witness(k, t, top, nodes, probe);
    if (found) return {top, *found};
  }
  fail(Errc::construction_failed, "no isomorphic image within bound");
}

}  // namespace detail

/// Exact a_m for the class of (k, T): the maximum, over all doubling-T sets
/// inside [0, max_length], of the top element of the set's shortest
/// normal-form isomorphic image. (Raw maxima are meaningless here: patterns
/// like {0,1,2,3,M} keep the same T for every large M but are all isomorphic
/// to one short set.) Scans tops downward and stops once no remaining top can
/// beat the best family. nullopt when no set attains T within the bound.
inline std::optional<Int> brute_a_m(std::int64_t k, const Int& T,
                                    const SearchBudget& budget = {}) {
  if (k < 3) fail(Errc::params_out_of_range, "need k >= 3");
  if (budget.max_length < 1 || budget.max_length > detail::kMaxScanLength)
    fail(Errc::params_out_of_range,
         "max_length must lie in [1, " +
             std::to_string(detail::kMaxScanLength) + "]");
  if (T < 1 || T > Int(k) * (k + 1) / 2) return std::nullopt;
  const std::size_t target_t = static_cast<std::size_t>(to_int64(T));

  detail::NodeCounter nodes{0, budget.max_nodes};
  std::optional<int> best;
  for (int top = static_cast<int>(budget.max_length); top >= k - 1; --top) {
    if (best && top <= *best) break;
    std::vector<std::vector<int>> witnesses;
    detail::for_each_witness(static_cast<int>(k), target_t, top, nodes,
                             [&](const std::vector<int>& w) {
                               witnesses.push_back(w);
                             });
    for (const auto& w : witnesses) {
      if (best && top <= *best) break;
      std::vector<Int> v(w.begin(), w.end());
      Set1D a(std::move(v));
      auto [fm, image] = detail::min_iso_image(a, top, nodes, budget);
      if (!best || fm > *best) best = fm;
    }
  }
  if (!best) return std::nullopt;
  return Int(*best);
}

struct MinVolumeResult {
  Int length;     // point count of the shortest segment found
  Set1D witness;  // a normal-form set of that length isomorphic to the input
};

/// Minimal 1D length over all normal-form images Freiman-isomorphic to A.
/// normalize(A) itself bounds the scan, so the result never exceeds
/// volume_1d(A).
inline MinVolumeResult min_volume_search(const Set1D& a,
                                         const SearchBudget& budget = {}) {
  if (freiman_dim(a) != 1)
    fail(Errc::dim_not_one, "volume search needs a one-dimensional set");
  if (static_cast<std::int64_t>(a.k()) > budget.max_k)
    fail(Errc::budget_exceeded, "cardinality above budget.max_k");
  const Set1D base = normalize(a);
  const Int upper = volume_1d(base);
  if (upper - 1 > budget.max_length)
    fail(Errc::budget_exceeded, "normal form longer than budget.max_length");
  detail::NodeCounter nodes{0, budget.max_nodes};
  auto [top, witness] = detail::min_iso_image(
      base, static_cast<int>(to_int64(upper - 1)), nodes, budget);
  return MinVolumeResult{Int(top) + 1, witness};
}

struct MinVolume2DResult {
  Int volume;
  Set2D witness;
  bool exact = false;  // false: reported value is only an upper bound
};

/// Bounded planar variant: exact minimization over images inside a small
/// grid for k <= 5, otherwise the embedding's own hull count as an upper
/// bound.
inline MinVolume2DResult min_volume_search_2d(const Set2D& a,
                                              const SearchBudget& budget = {}) {
  const Int upper = hull_lattice_count(a);
  if (a.k() > 5) return {upper, a, false};
  const int grid = 4;
  const std::size_t k = a.k();
  const std::size_t t_a = a.doubling_size();
  std::vector<Point> cells;
  for (int x = 0; x <= grid; ++x)
    for (int y = 0; y <= grid; ++y) cells.push_back({x, y});
  detail::NodeCounter nodes{0, budget.max_nodes};

  MinVolume2DResult best{upper, a, true};
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    nodes.tick();
    std::vector<Point> pts;
    pts.reserve(k);
    for (std::size_t i : idx) pts.push_back(cells[i]);
    Set2D cand(std::move(pts));
    if (cand.doubling_size() == t_a) {
      Int vol = hull_lattice_count(cand);
      if (vol < best.volume && exists_isomorphism(a, cand, budget))
        best = {vol, cand, true};
    }
    std::size_t i = k;
    while (i-- > 0) {
      if (idx[i] != cells.size() - (k - i)) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return best;
    }
  }
}

}  // namespace addvol
