#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "addvol/numeric.hpp"
#include "addvol/set1d.hpp"
#include "addvol/set2d.hpp"

namespace addvol {

// A relation a_i + a_j = a_r + a_s (allowing i=j or r=s) is encoded as the
// k-vector e_i + e_j - e_r - e_s. Rows are canonicalized so the first nonzero
// entry is positive, deduplicated, and kept in lexicographic order.
using RelationRow = std::vector<Int>;

struct RelationMatrix {
  std::size_t k = 0;
  std::vector<RelationRow> rows;
  std::size_t lambda = 0;  // rank of the row space over the rationals
};

/// Exact rank over Q by fraction-free (Bareiss) elimination. Destroys its
/// argument. No floating point anywhere: rank misclassification would change
/// the computed dimension.
inline std::size_t rational_rank(std::vector<std::vector<Int>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    const Int& piv = m[rank][col];
    // Every row below gets the full transform, including zero-column rows
    // (they scale by piv/prev); skipping them breaks the exact-division
    // invariant.
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      for (std::size_t c = col + 1; c < cols; ++c)
        m[r][c] = (piv * m[r][c] - m[r][col] * m[rank][c]) / prev;
      m[r][col] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

namespace detail {

template <class Elem>
RelationMatrix relation_matrix_of(const std::vector<Elem>& elems) {
  const std::size_t k = elems.size();
  RelationMatrix out;
  out.k = k;

  // Group unordered index pairs (i <= j) by their element sum; every pair of
  // distinct pairs in a group is one relation.
  std::map<Elem, std::vector<std::pair<std::size_t, std::size_t>>> by_sum;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j)
      by_sum[elems[i] + elems[j]].push_back({i, j});

  for (const auto& [sum, pairs] : by_sum) {
    for (std::size_t a = 0; a < pairs.size(); ++a) {
      for (std::size_t b = a + 1; b < pairs.size(); ++b) {
        RelationRow row(k, Int(0));
        row[pairs[a].first] += 1;
        row[pairs[a].second] += 1;
        row[pairs[b].first] -= 1;
        row[pairs[b].second] -= 1;
        for (const Int& v : row) {
          if (v == 0) continue;
          if (v < 0)
            for (Int& w : row) w = -w;
          break;
        }
        out.rows.push_back(std::move(row));
      }
    }
  }
  std::sort(out.rows.begin(), out.rows.end());
  out.rows.erase(std::unique(out.rows.begin(), out.rows.end()),
                 out.rows.end());
  out.lambda = rational_rank(out.rows);
  return out;
}

}  // namespace detail

inline RelationMatrix relation_matrix(const Set1D& a) {
  return detail::relation_matrix_of(a.elements());
}

inline RelationMatrix relation_matrix(const Set2D& a) {
  return detail::relation_matrix_of(a.points());
}

/// dim A = k - 1 - lambda(A), the rank formula for the Freiman dimension.
template <class SetT>
std::int64_t freiman_dim(const SetT& a) {
  if (a.k() == 1) return 0;
  const RelationMatrix rm = relation_matrix(a);
  return static_cast<std::int64_t>(a.k()) - 1 -
         static_cast<std::int64_t>(rm.lambda);
}

/// Signed combination of set elements encoded by a row; zero for every row of
/// the set's own relation matrix (the dot-product sanity check).
template <class Elem>
Elem evaluate_row(const RelationRow& row, const std::vector<Elem>& elems) {
  Elem acc{};
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    Int c = row[i];
    while (c > 0) { acc = acc + elems[i]; c -= 1; }
    while (c < 0) { acc = acc - elems[i]; c += 1; }
  }
  return acc;
}

}  // namespace addvol
