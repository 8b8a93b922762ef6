#pragma once

#include <string>
#include <vector>

#include "qinv/quiver.hpp"
#include "qinv/rep.hpp"
#include "qinv/shape.hpp"

namespace qinv {

/// Per-arrow section shapes determined by the psi choice.
struct SectionSpec {
  int n = 0;
  std::vector<Shape> shapes;  // aligned with Quiver::arrows

  int dim_total() const {
    int d = 0;
    for (Shape s : shapes) d += shape_dim(s, n);
    return d;
  }
};

/// Shape of the arrow's section subspace.  For an arrow between distinct
/// vertices: Full if the arrow is not a psi value, LowerAnti if chosen at
/// its target only, UpperAnti if chosen at its source only, AntiDiag if
/// chosen at both ends.  For a loop: LowerAnti if chosen, Full otherwise.
Shape shape_of(const Quiver& quiver, const PsiChoice& psi, const std::string& arrow);

SectionSpec make_section(const Quiver& quiver, const PsiChoice& psi, int n);

/// Conjunction of per-arrow shape membership.
template <class S>
bool project_membership(const RepPoint<S>& h, const SectionSpec& spec) {
  if (h.mats.size() != spec.shapes.size())
    throw Error("project_membership: arrow count mismatch");
  for (size_t t = 0; t < h.mats.size(); ++t)
    if (!shape_member(h.mats[t], spec.shapes[t])) return false;
  return true;
}

}  // namespace qinv
