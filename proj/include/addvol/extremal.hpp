#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "addvol/error.hpp"
#include "addvol/numeric.hpp"
#include "addvol/set1d.hpp"

namespace addvol {

// T and (c, b) parametrize each other through
//   T = c*k - (c^2 + c - 4)/2 + b,   2 <= c <= k-1,   0 <= b <= k-c-1,
// and the extremal maximum element is a_m = 2^(c-2) * (k + 1 - c + b).

struct ExtremalParams {
  std::int64_t k = 0;
  std::int64_t c = 0;
  std::int64_t b = 0;
  std::int64_t k0 = 0;  // c - 2
  std::int64_t k1 = 0;  // k - k0
  std::int64_t k2 = 0;  // ceil(k0/2), the doubling-chain half
  std::int64_t k3 = 0;  // floor(k0/2)
  Int p;                // 2^k2 * (k1 - 1 + b), last element of the scaled core

  static ExtremalParams make(std::int64_t k, std::int64_t c, std::int64_t b) {
    if (k < 3 || c < 2 || c > k - 1 || b < 0 || b > k - c - 1)
      fail(Errc::params_out_of_range,
           "need 2 <= c <= k-1 and 0 <= b <= k-c-1");
    ExtremalParams e;
    e.k = k;
    e.c = c;
    e.b = b;
    e.k0 = c - 2;
    e.k1 = k - e.k0;
    e.k2 = (e.k0 + 1) / 2;
    e.k3 = e.k0 / 2;
    e.p = pow2(e.k2) * (e.k1 - 1 + b);
    return e;
  }
};

inline Int compose_T(std::int64_t k, std::int64_t c, std::int64_t b) {
  ExtremalParams::make(k, c, b);
  return Int(c) * k - (Int(c) * c + c - 4) / 2 + b;
}

inline Int min_T(std::int64_t k) { return 2 * Int(k) - 1; }
inline Int max_T(std::int64_t k) { return (Int(k) * k - k) / 2 + 2; }

/// Canonical (c, b) for a given T: the smallest c whose segment contains T.
/// Segment boundaries (b = k-c-1 versus the next c with b = 0) therefore
/// resolve to the smaller c; a_m agrees on both readings.
inline std::pair<std::int64_t, std::int64_t> decompose_T(std::int64_t k,
                                                         const Int& T) {
  if (k < 3 || T < min_T(k) || T > max_T(k))
    fail(Errc::t_out_of_range,
         "T must lie in [2k-1, (k^2-k)/2 + 2], got " + to_string(T));
  for (std::int64_t c = 2; c <= k - 1; ++c) {
    Int b = T - (Int(c) * k - (Int(c) * c + c - 4) / 2);
    if (b >= 0 && b <= k - c - 1) return {c, to_int64(b)};
  }
  fail(Errc::t_out_of_range, "no (c,b) segment contains T=" + to_string(T));
}

inline Int a_m_formula(std::int64_t k, const Int& T) {
  auto [c, b] = decompose_T(k, T);
  return pow2(c - 2) * (Int(k) + 1 - c + b);
}

/// The 3k-4-range extremal set {0,...,k1-2} u {k1-1+b}: a segment with its
/// top element pushed out by b holes. Doubling count 2*k1-1+b is verified on
/// construction.
inline Set1D basic_extremal(std::int64_t k1, std::int64_t b) {
  if (k1 < 3 || b < 0 || b > k1 - 3)
    fail(Errc::params_out_of_range, "need k1 >= 3 and 0 <= b <= k1-3");
  std::vector<Int> v;
  for (std::int64_t i = 0; i <= k1 - 2; ++i) v.push_back(i);
  v.push_back(Int(k1) - 1 + b);
  Set1D a(std::move(v));
  if (a.doubling_size() != static_cast<std::size_t>(2 * k1 - 1 + b))
    fail(Errc::construction_failed, "basic extremal doubling check failed");
  return a;
}

/// Generalized extremal set
///   {0} u {1,2,...,2^(k2-1)} u 2^k2 * core u 2p * {1,2,...,2^(k3-1)},
/// with core any k1-point subset of [0, k1-1+b] containing 0 and k1-1+b whose
/// doubling has 2*k1-1+b elements (default: basic_extremal). The (k, T, max)
/// triple is verified on construction.
inline Set1D gen_extremal(std::int64_t k, std::int64_t c, std::int64_t b,
                          const std::optional<Set1D>& core = std::nullopt) {
  const ExtremalParams e = ExtremalParams::make(k, c, b);
  Set1D a1 = core ? *core : basic_extremal(e.k1, e.b);
  if (a1.k() != static_cast<std::size_t>(e.k1) || a1.min() != 0 ||
      a1.max() != Int(e.k1) - 1 + e.b ||
      a1.doubling_size() != static_cast<std::size_t>(2 * e.k1 - 1 + e.b))
    fail(Errc::construction_failed,
         "core must be a (k1, b) set of the 3k-4 range");

  std::vector<Int> v;
  v.push_back(0);
  for (std::int64_t i = 0; i < e.k2; ++i) v.push_back(pow2(i));
  const Int scale = pow2(e.k2);
  for (const Int& x : a1.elements())
    if (x != 0) v.push_back(scale * x);
  for (std::int64_t i = 0; i < e.k3; ++i) v.push_back(2 * e.p * pow2(i));
  Set1D a(std::move(v));

  if (a.k() != static_cast<std::size_t>(k) ||
      Int(a.doubling_size()) != compose_T(k, c, b) ||
      a.max() != pow2(c - 2) * (Int(k) + 1 - c + b))
    fail(Errc::construction_failed,
         "generalized extremal (k, T, max) triple check failed");
  return a;
}

// --- approximate groups -----------------------------------------------------

struct ApproxGroupParams {
  std::int64_t kbar1 = 0;  // odd core cardinality
  std::int64_t kbar2 = 0;  // symmetric pairs added at 3p, 9p, ...
  std::int64_t b = 0;      // even hole count of the core
  std::int64_t k = 0;      // kbar1 + 2*kbar2
  std::int64_t c = 0;      // 2*kbar2 + 2
  Int p;                   // (kbar1 - 1 + b)/2, core endpoint

  static ApproxGroupParams make(std::int64_t kbar1, std::int64_t kbar2,
                                std::int64_t b) {
    if (kbar1 < 3 || kbar1 % 2 == 0 || kbar2 < 0 || b < 0 || b % 2 != 0 ||
        b > kbar1 - 3)
      fail(Errc::params_out_of_range,
           "need odd kbar1 >= 3, kbar2 >= 0, even b <= kbar1-3");
    ApproxGroupParams g;
    g.kbar1 = kbar1;
    g.kbar2 = kbar2;
    g.b = b;
    g.k = kbar1 + 2 * kbar2;
    g.c = 2 * kbar2 + 2;
    g.p = Int(kbar1 - 1 + b) / 2;
    return g;
  }
};

/// Conjectured minimal symmetric span for given (k, T): 3^(c/2-1)*(k-c+b+1)+1.
inline Int L_m_formula(std::int64_t k, std::int64_t c, std::int64_t b) {
  if (k < 3 || c < 2 || c % 2 != 0 || c > k - 1 || b < 0 || b > k - c - 1)
    fail(Errc::params_out_of_range,
         "need even c with 2 <= c <= k-1 and 0 <= b <= k-c-1");
  return pow_int(3, c / 2 - 1) * (Int(k) - c + b + 1) + 1;
}

/// The denominator-4 closed form c*k - (3c^2 - 2c - 4)/4 + b for the doubling
/// of the symmetric construction. Exact for kbar2 <= 1 (c in {2,4}); for
/// larger kbar2 the construction's actual doubling exceeds it (the generator
/// reports both values rather than hiding the difference).
inline Int approx_compose_T(std::int64_t k, std::int64_t c, std::int64_t b) {
  if (k < 3 || c < 2 || c % 2 != 0 || c > k - 1 || b < 0 || b > k - c - 1)
    fail(Errc::params_out_of_range,
         "need even c with 2 <= c <= k-1 and 0 <= b <= k-c-1");
  return Int(c) * k - (3 * Int(c) * c - 2 * c - 4) / 4 + b;
}

/// Symmetric set A0 u {±3p, ±9p, ..., ±3^kbar2 * p} where A0 is the centered
/// 3k-4-range core {-p} u [-(kbar1-3)/2, (kbar1-3)/2] u {p}. Symmetry,
/// 0-membership, the core doubling count and the span are verified on
/// construction.
inline Set1D gen_approx_group(const ApproxGroupParams& g) {
  std::vector<Int> v;
  const Int half = Int(g.kbar1 - 3) / 2;
  for (Int x = -half; x <= half; ++x) v.push_back(x);
  if (g.p > half) {
    v.push_back(g.p);
    v.push_back(-g.p);
  }
  Set1D core(v);
  if (core.k() != static_cast<std::size_t>(g.kbar1) ||
      core.doubling_size() != static_cast<std::size_t>(2 * g.kbar1 - 1 + g.b))
    fail(Errc::construction_failed, "core doubling check failed");

  Int q = g.p;
  for (std::int64_t j = 1; j <= g.kbar2; ++j) {
    q *= 3;
    v.push_back(q);
    v.push_back(-q);
  }
  Set1D a(std::move(v));
  for (const Int& x : a.elements())
    if (!a.contains(-x)) fail(Errc::construction_failed, "set not symmetric");
  if (!a.contains(0)) fail(Errc::construction_failed, "0 missing");
  if (a.k() != static_cast<std::size_t>(g.k) ||
      a.max() - a.min() + 1 != L_m_formula(g.k, g.c, g.b))
    fail(Errc::construction_failed, "span check against L_m failed");
  return a;
}

}  // namespace addvol
