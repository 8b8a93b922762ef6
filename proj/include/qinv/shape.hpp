#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qinv/matrix.hpp"
#include "qinv/order.hpp"

namespace qinv {

/// Per-arrow section subspace of Mat(n).  Position (i,j) lies above the
/// anti-diagonal iff j < i', below iff j > i'.
enum class Shape { Full, LowerAnti, UpperAnti, AntiDiag };

inline const char* shape_name(Shape s) {
  switch (s) {
    case Shape::Full: return "Full";
    case Shape::LowerAnti: return "LowerAnti";
    case Shape::UpperAnti: return "UpperAnti";
    case Shape::AntiDiag: return "AntiDiag";
  }
  return "?";
}

inline int shape_dim(Shape s, int n) {
  switch (s) {
    case Shape::Full: return n * n;
    case Shape::LowerAnti:
    case Shape::UpperAnti: return n * (n + 1) / 2;
    case Shape::AntiDiag: return n;
  }
  return 0;
}

/// Whether position (i,j) is a free coordinate of the shape.
inline bool shape_contains(Shape s, int i, int j, int n) {
  const int ip = mirror(i, n);
  switch (s) {
    case Shape::Full: return true;
    case Shape::LowerAnti: return j >= ip;
    case Shape::UpperAnti: return j <= ip;
    case Shape::AntiDiag: return j == ip;
  }
  return false;
}

/// Free coordinates of the shape, ascending by `prec`.
inline std::vector<IndexPair> free_coordinates(Shape s, int n) {
  std::vector<IndexPair> out;
  for (const IndexPair& p : all_positions(n))
    if (shape_contains(s, p.i, p.k, n)) out.push_back(p);
  return out;
}

/// Membership of a concrete matrix in the subspace.
template <class S>
bool shape_member(const SquareMatrix<S>& m, Shape s) {
  const int n = m.size();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!shape_contains(s, i, j, n) && !is_zero(m.at(i, j))) return false;
  return true;
}

}  // namespace qinv
