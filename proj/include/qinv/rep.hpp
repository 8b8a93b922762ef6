#pragma once

#include <vector>

#include "qinv/matrix.hpp"
#include "qinv/quiver.hpp"

namespace qinv {

/// A representation point: one n x n matrix per arrow, aligned with
/// Quiver::arrows order.
template <class S>
struct RepPoint {
  std::vector<SquareMatrix<S>> mats;

  int n() const { return mats.empty() ? 0 : mats.front().size(); }
};

/// One unitriangular matrix per vertex, aligned with Quiver::vertices.
template <class S>
struct GroupElement {
  std::vector<SquareMatrix<S>> mats;

  int n() const { return mats.empty() ? 0 : mats.front().size(); }
};

template <class S>
GroupElement<S> identity_group(const Quiver& q, int n, const S& one) {
  GroupElement<S> g;
  g.mats.assign(q.vertices.size(), identity_matrix(n, one));
  return g;
}

/// The action g.h = (g_t(a) X_a g_s(a)^-1) per arrow.
template <class S>
RepPoint<S> act(const Quiver& q, const GroupElement<S>& g, const RepPoint<S>& h) {
  if (g.mats.size() != q.vertices.size() || h.mats.size() != q.arrows.size())
    throw Error("act: component count mismatch");
  if (!h.mats.empty() && !g.mats.empty() && g.n() != h.n())
    throw Error("act: dimension mismatch");
  std::vector<SquareMatrix<S>> inverses;
  inverses.reserve(g.mats.size());
  for (const auto& m : g.mats) inverses.push_back(inverse(m));
  RepPoint<S> out;
  out.mats.reserve(h.mats.size());
  for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
    const int ti = q.vertex_index(q.arrows[ai].target);
    const int si = q.vertex_index(q.arrows[ai].source);
    if (ti < 0 || si < 0) throw Error("act: arrow endpoint not in quiver");
    out.mats.push_back(g.mats[ti] * h.mats[ai] * inverses[si]);
  }
  return out;
}

/// Componentwise product, for the action axiom g1.(g2.h) = (g1 g2).h.
template <class S>
GroupElement<S> group_mul(const GroupElement<S>& a, const GroupElement<S>& b) {
  if (a.mats.size() != b.mats.size()) throw Error("group_mul: size mismatch");
  GroupElement<S> out;
  out.mats.reserve(a.mats.size());
  for (size_t t = 0; t < a.mats.size(); ++t) out.mats.push_back(a.mats[t] * b.mats[t]);
  return out;
}

template <class S>
GroupElement<S> group_inverse(const GroupElement<S>& g) {
  GroupElement<S> out;
  out.mats.reserve(g.mats.size());
  for (const auto& m : g.mats) out.mats.push_back(inverse_unitriangular(m));
  return out;
}

}  // namespace qinv
