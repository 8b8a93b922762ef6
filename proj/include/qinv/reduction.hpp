#pragma once

#include <utility>
#include <vector>

#include "qinv/minors.hpp"
#include "qinv/quiver.hpp"
#include "qinv/rep.hpp"
#include "qinv/section.hpp"

namespace qinv {

/// Throws OmegaError naming the first level k with a vanishing corner minor.
template <class S>
void require_omega(const SquareMatrix<S>& x, const std::string& arrow = {}) {
  for (int k = 1; k <= x.size(); ++k)
    if (is_zero(corner_minor(x, k))) throw OmegaError(arrow, k);
}

/// Unitriangular u with u*X lower anti-triangular.  Pivots run along the
/// anti-diagonal from (n,1) upward; entries above each pivot are cleared by
/// adding multiples of the pivot row to higher rows.  Every pivot is
/// nonzero because the corner minors, which row operations preserve, stay
/// nonzero.
template <class S>
SquareMatrix<S> reduce_left(const SquareMatrix<S>& x) {
  require_omega(x);
  const int n = x.size();
  SquareMatrix<S> a = x;
  SquareMatrix<S> u = identity_matrix(n, one_of(x.at(1, 1)));
  for (int c = 1; c < n; ++c) {
    const int p = mirror(c, n);  // pivot row for column c
    const S pv = a.at(p, c);
    if (is_zero(pv)) throw Error("reduce_left: zero pivot");
    for (int r = 1; r < p; ++r) {
      if (is_zero(a.at(r, c))) continue;
      const S f = a.at(r, c) / pv;
      for (int j = 1; j <= n; ++j) {
        a.at(r, j) = a.at(r, j) - f * a.at(p, j);
        u.at(r, j) = u.at(r, j) - f * u.at(p, j);
      }
    }
  }
  return u;
}

/// Unitriangular u with X*u^-1 upper anti-triangular; the column-operation
/// mirror of reduce_left.
template <class S>
SquareMatrix<S> reduce_right(const SquareMatrix<S>& x) {
  require_omega(x);
  const int n = x.size();
  SquareMatrix<S> a = x;
  SquareMatrix<S> v = identity_matrix(n, one_of(x.at(1, 1)));
  for (int r = n; r >= 2; --r) {
    const int pc = mirror(r, n);  // pivot column for row r
    const S pv = a.at(r, pc);
    if (is_zero(pv)) throw Error("reduce_right: zero pivot");
    for (int c = pc + 1; c <= n; ++c) {
      if (is_zero(a.at(r, c))) continue;
      const S f = a.at(r, c) / pv;
      for (int j = 1; j <= n; ++j) {
        a.at(j, c) = a.at(j, c) - f * a.at(j, pc);
        v.at(j, c) = v.at(j, c) - f * v.at(j, pc);
      }
    }
  }
  return inverse_unitriangular(v);
}

/// (u1, u2) with u1*X*u2^-1 anti-diagonal.  Composes reduce_left with the
/// right-clearing pass; right column operations keep the lower
/// anti-triangular zeros intact.
template <class S>
std::pair<SquareMatrix<S>, SquareMatrix<S>> reduce_joint(const SquareMatrix<S>& x) {
  SquareMatrix<S> u1 = reduce_left(x);
  SquareMatrix<S> u2 = reduce_right(u1 * x);
  return {std::move(u1), std::move(u2)};
}

/// Group element g with act(g, h) in the section.  Each vertex receives its
/// matrix exactly once, from the arrow psi(v); arrows outside the psi image
/// land in a Full shape, and interactions at unconstrained ends are
/// absorbed by the closures S-.UT within S- and UT.S+ within S+.
template <class S>
GroupElement<S> reduce_to_section(const Quiver& quiver, const PsiChoice& psi,
                                  const RepPoint<S>& h) {
  if (h.mats.size() != quiver.arrows.size())
    throw Error("reduce_to_section: arrow count mismatch");
  const int n = h.n();
  for (size_t a = 0; a < quiver.arrows.size(); ++a)
    require_omega(h.mats[a], quiver.arrows[a].name);

  GroupElement<S> g = identity_group(quiver, n, one_of(h.mats.front().at(1, 1)));
  std::vector<bool> assigned(quiver.vertices.size(), false);

  for (size_t vi = 0; vi < quiver.vertices.size(); ++vi) {
    if (assigned[vi]) continue;
    const std::string& v = quiver.vertices[vi];
    const auto it = psi.find(v);
    if (it == psi.end()) throw Error("reduce_to_section: psi not total at '" + v + "'");
    const int ai = quiver.arrow_index(it->second);
    if (ai < 0) throw Error("reduce_to_section: unknown arrow '" + it->second + "'");
    const Arrow& alpha = quiver.arrows[ai];
    const SquareMatrix<S>& x = h.mats[ai];

    if (alpha.is_loop()) {
      g.mats[vi] = reduce_left(x);
      assigned[vi] = true;
      continue;
    }
    const int si = quiver.vertex_index(alpha.source);
    const int ti = quiver.vertex_index(alpha.target);
    const bool chosen_at_source = psi.at(alpha.source) == alpha.name;
    const bool chosen_at_target = psi.at(alpha.target) == alpha.name;
    if (chosen_at_source && chosen_at_target) {
      auto [u1, u2] = reduce_joint(x);
      g.mats[ti] = std::move(u1);
      g.mats[si] = std::move(u2);
      assigned[ti] = true;
      assigned[si] = true;
    } else if (static_cast<int>(vi) == ti) {
      g.mats[vi] = reduce_left(x);
      assigned[vi] = true;
    } else {
      g.mats[vi] = reduce_right(x);
      assigned[vi] = true;
    }
  }
  return g;
}

}  // namespace qinv
