#include "qinv/section.hpp"

#include "qinv/error.hpp"

namespace qinv {

Shape shape_of(const Quiver& quiver, const PsiChoice& psi, const std::string& arrow) {
  const int ai = quiver.arrow_index(arrow);
  if (ai < 0) throw Error("shape_of: unknown arrow '" + arrow + "'");
  const Arrow& a = quiver.arrows[ai];

  auto chosen_at = [&](const std::string& v) {
    const auto it = psi.find(v);
    return it != psi.end() && it->second == a.name;
  };

  if (a.is_loop()) return chosen_at(a.source) ? Shape::LowerAnti : Shape::Full;

  const bool at_target = chosen_at(a.target);
  const bool at_source = chosen_at(a.source);
  if (at_target && at_source) return Shape::AntiDiag;
  if (at_target) return Shape::LowerAnti;
  if (at_source) return Shape::UpperAnti;
  return Shape::Full;
}

SectionSpec make_section(const Quiver& quiver, const PsiChoice& psi, int n) {
  SectionSpec spec;
  spec.n = n;
  spec.shapes.reserve(quiver.arrows.size());
  for (const Arrow& a : quiver.arrows) spec.shapes.push_back(shape_of(quiver, psi, a.name));
  return spec;
}

}  // namespace qinv
