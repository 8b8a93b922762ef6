#pragma once

#include <string>
#include <vector>

#include "qinv/dual.hpp"
#include "qinv/minors.hpp"
#include "qinv/order.hpp"
#include "qinv/rep.hpp"

namespace qinv {

enum class GenKind { D, P, Rminus, Rplus };
enum class Side { Diagonal, Source, Target };

inline const char* kind_name(GenKind k) {
  switch (k) {
    case GenKind::D: return "D";
    case GenKind::P: return "P";
    case GenKind::Rminus: return "R-";
    case GenKind::Rplus: return "R+";
  }
  return "?";
}

inline const char* side_name(Side s) {
  switch (s) {
    case Side::Diagonal: return "diagonal";
    case Side::Source: return "source";
    case Side::Target: return "target";
  }
  return "?";
}

/// One invariant of the generator system.  `arrow_a`/`arrow_b` are the
/// evaluation arguments in order; for D only `arrow_a` is used.  The
/// leading coordinate is the matrix entry from which the invariant arises
/// by a triangular transformation on the section.
struct GeneratorDescriptor {
  GenKind kind = GenKind::D;
  Side side = Side::Diagonal;
  int arrow_a = -1;
  int arrow_b = -1;
  int i = 0;  // unused for D
  int k = 0;
  int lead_arrow = -1;
  int lead_row = 0;
  int lead_col = 0;
  std::string id;

  bool operator==(const GeneratorDescriptor&) const = default;
};

/// P_ik(X, Y) = sum over i' <= j <= k of minor_m(X, i, j) * minor_n(Y, j, k),
/// defined for (i,k) below the anti-diagonal (i' < k).
template <class S>
S eval_P(const SquareMatrix<S>& X, const SquareMatrix<S>& Y, int i, int k) {
  const int n = X.size();
  if (Y.size() != n) throw Error("eval_P: size mismatch");
  if (i < 1 || i > n || k < 1 || k > n || mirror(i, n) >= k)
    throw Error("eval_P requires i' < k");
  S acc = zero_of(X.at(1, 1));
  for (int j = mirror(i, n); j <= k; ++j) acc = acc + minor_m(X, i, j) * minor_n(Y, j, k);
  return acc;
}

/// R-_ik(X, Y): determinant of the k x k matrix whose top i' rows are rows
/// [i,n] x cols [1,k] of X and bottom k-i' rows are the last k-i' rows x
/// cols [1,k] of Y.  Defined for i' < k.
template <class S>
S eval_Rminus(const SquareMatrix<S>& X, const SquareMatrix<S>& Y, int i, int k) {
  const int n = X.size();
  if (Y.size() != n) throw Error("eval_Rminus: size mismatch");
  const int ip = mirror(i, n);
  if (i < 1 || i > n || k < 1 || k > n || ip >= k) throw Error("eval_Rminus requires i' < k");
  SquareMatrix<S> m(k, zero_of(X.at(1, 1)));
  for (int r = 1; r <= ip; ++r)
    for (int c = 1; c <= k; ++c) m.at(r, c) = X.at(i + r - 1, c);
  const int ytop = n - (k - ip) + 1;
  for (int r = 1; r <= k - ip; ++r)
    for (int c = 1; c <= k; ++c) m.at(ip + r, c) = Y.at(ytop + r - 1, c);
  return det(m);
}

/// R+_ik(Z, X): determinant of the i' x i' matrix (rows [i,n]) whose left
/// i'-k columns are cols [1,i'-k] of Z and right k columns are cols [1,k]
/// of X.  Defined for i' > k.
template <class S>
S eval_Rplus(const SquareMatrix<S>& Z, const SquareMatrix<S>& X, int i, int k) {
  const int n = Z.size();
  if (X.size() != n) throw Error("eval_Rplus: size mismatch");
  const int ip = mirror(i, n);
  if (i < 1 || i > n || k < 1 || k > n || ip <= k) throw Error("eval_Rplus requires i' > k");
  SquareMatrix<S> m(ip, zero_of(Z.at(1, 1)));
  for (int r = 1; r <= ip; ++r) {
    for (int c = 1; c <= ip - k; ++c) m.at(r, c) = Z.at(i + r - 1, c);
    for (int c = 1; c <= k; ++c) m.at(r, ip - k + c) = X.at(i + r - 1, c);
  }
  return det(m);
}

template <class S>
S eval_generator(const GeneratorDescriptor& d, const RepPoint<S>& h) {
  const auto arrow_mat = [&](int idx) -> const SquareMatrix<S>& {
    if (idx < 0 || static_cast<size_t>(idx) >= h.mats.size())
      throw Error("eval_generator: descriptor arrow not present in point");
    return h.mats[static_cast<size_t>(idx)];
  };
  switch (d.kind) {
    case GenKind::D: return corner_minor(arrow_mat(d.arrow_a), d.k);
    case GenKind::P: return eval_P(arrow_mat(d.arrow_a), arrow_mat(d.arrow_b), d.i, d.k);
    case GenKind::Rminus:
      return eval_Rminus(arrow_mat(d.arrow_a), arrow_mat(d.arrow_b), d.i, d.k);
    case GenKind::Rplus:
      return eval_Rplus(arrow_mat(d.arrow_a), arrow_mat(d.arrow_b), d.i, d.k);
  }
  throw Error("eval_generator: bad kind");
}

/// An ambient coordinate (arrow index, row, col).
struct Coord {
  int arrow = -1;
  int row = 0;
  int col = 0;

  bool operator==(const Coord&) const = default;
};

template <class S>
RepPoint<Dual<S>> lift_point(const RepPoint<S>& h) {
  RepPoint<Dual<S>> out;
  out.mats.reserve(h.mats.size());
  for (const auto& m : h.mats) {
    const int n = m.size();
    SquareMatrix<Dual<S>> dm(n, Dual<S>::constant(m.at(1, 1)));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) dm.at(i, j) = Dual<S>::constant(m.at(i, j));
    out.mats.push_back(std::move(dm));
  }
  return out;
}

/// Exact partial derivatives of the generator at h, one dual-number
/// evaluation per coordinate.  Coordinates of arrows that do not appear in
/// the descriptor contribute zero without an evaluation.
template <class S>
std::vector<S> partials(const GeneratorDescriptor& d, const RepPoint<S>& h,
                        const std::vector<Coord>& coords) {
  RepPoint<Dual<S>> hd = lift_point(h);
  const S zero = zero_of(h.mats.at(0).at(1, 1));
  std::vector<S> out;
  out.reserve(coords.size());
  for (const Coord& c : coords) {
    if (c.arrow != d.arrow_a && c.arrow != d.arrow_b) {
      out.push_back(zero);
      continue;
    }
    auto& entry = hd.mats.at(static_cast<size_t>(c.arrow)).at(c.row, c.col);
    entry.b = one_of(entry.a);
    out.push_back(eval_generator(d, hd).b);
    entry.b = zero_of(entry.a);
  }
  return out;
}

template <class S>
S partial(const GeneratorDescriptor& d, const RepPoint<S>& h, const Coord& c) {
  return partials(d, h, std::vector<Coord>{c}).front();
}

}  // namespace qinv
