#pragma once

#include <vector>

#include "qinv/matrix.hpp"
#include "qinv/order.hpp"

namespace qinv {

template <class S>
SquareMatrix<S> submatrix(const SquareMatrix<S>& m, const std::vector<int>& rows,
                          const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw Error("submatrix: row/col count mismatch");
  if (rows.empty()) throw Error("submatrix: empty index set");
  const int n = m.size();
  for (int r : rows)
    if (r < 1 || r > n) throw Error("submatrix: row index out of range");
  for (int c : cols)
    if (c < 1 || c > n) throw Error("submatrix: col index out of range");
  const int k = static_cast<int>(rows.size());
  SquareMatrix<S> out(k, zero_of(m.at(1, 1)));
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b) out.at(a, b) = m.at(rows[a - 1], cols[b - 1]);
  return out;
}

inline std::vector<int> index_range(int lo, int hi) {
  std::vector<int> out;
  for (int t = lo; t <= hi; ++t) out.push_back(t);
  return out;
}

/// Determinant of the submatrix selected by `rows` x `cols`, taken in the
/// given order.
template <class S>
S minor_of(const SquareMatrix<S>& m, const std::vector<int>& rows,
           const std::vector<int>& cols) {
  return det(submatrix(m, rows, cols));
}

/// Left lower corner minor of order k': rows [k,n], columns [1,k'].
/// corner_minor(m, 1) is det(m), corner_minor(m, n) the entry (n,1).
template <class S>
S corner_minor(const SquareMatrix<S>& m, int k) {
  const int n = m.size();
  if (k < 1 || k > n) throw Error("corner_minor: level out of range");
  return minor_of(m, index_range(k, n), index_range(1, mirror(k, n)));
}

/// Minor of order i' with rows [i,n] and columns [1,i'-1] joined with {j}.
/// Defined for i' <= j; minor_m(m, k, k') equals corner_minor(m, k).
template <class S>
S minor_m(const SquareMatrix<S>& m, int i, int j) {
  const int n = m.size();
  if (i < 1 || i > n || j < 1 || j > n) throw Error("minor_m: index out of range");
  const int ip = mirror(i, n);
  if (j < ip) throw Error("minor_m requires i' <= j");
  std::vector<int> cols = index_range(1, ip - 1);
  cols.push_back(j);
  return minor_of(m, index_range(i, n), cols);
}

/// Minor of order k' with rows {j} joined with [k+1,n] and columns [1,k'].
/// Defined for j <= k; minor_n(m, k, k) equals corner_minor(m, k).
template <class S>
S minor_n(const SquareMatrix<S>& m, int j, int k) {
  const int n = m.size();
  if (j < 1 || j > n || k < 1 || k > n) throw Error("minor_n: index out of range");
  if (j > k) throw Error("minor_n requires j <= k");
  std::vector<int> rows{j};
  for (int t = k + 1; t <= n; ++t) rows.push_back(t);
  return minor_of(m, rows, index_range(1, mirror(k, n)));
}

}  // namespace qinv
