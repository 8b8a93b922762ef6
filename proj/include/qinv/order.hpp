#pragma once

#include <vector>

namespace qinv {

/// Index symmetric to i with respect to the center of [1, n].
inline int mirror(int i, int n) { return n - i + 1; }

/// A (row, col) position in an n x n matrix, 1-based.
struct IndexPair {
  int i = 0;  // row
  int k = 0;  // col

  bool operator==(const IndexPair&) const = default;
};

/// Strict total order on matrix positions: (a,b) precedes (i,k) iff b < k,
/// or b = k and a > i.  Minimal element (n,1), maximal (1,n).
inline bool prec(IndexPair a, IndexPair b) {
  return a.k < b.k || (a.k == b.k && a.i > b.i);
}

/// All n^2 positions in ascending `prec` order.
inline std::vector<IndexPair> all_positions(int n) {
  std::vector<IndexPair> out;
  out.reserve(static_cast<size_t>(n) * n);
  for (int k = 1; k <= n; ++k)
    for (int i = n; i >= 1; --i) out.push_back({i, k});
  return out;
}

}  // namespace qinv
