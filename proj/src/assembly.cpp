#include "qinv/assembly.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "qinv/error.hpp"

namespace qinv {

std::vector<IndexPair> below_pairs(int n) {
  std::vector<IndexPair> out;
  for (const IndexPair& p : all_positions(n))
    if (mirror(p.i, n) < p.k) out.push_back(p);
  return out;
}

std::vector<IndexPair> above_pairs(int n) {
  std::vector<IndexPair> out;
  for (const IndexPair& p : all_positions(n))
    if (mirror(p.i, n) > p.k) out.push_back(p);
  return out;
}

namespace {

int psi_arrow(const Quiver& q, const PsiChoice& psi, const std::string& vertex) {
  const auto it = psi.find(vertex);
  if (it == psi.end()) throw Error("psi is not total: vertex '" + vertex + "'");
  const int ai = q.arrow_index(it->second);
  if (ai < 0) throw Error("psi maps to unknown arrow '" + it->second + "'");
  return ai;
}

std::string make_id(GenKind kind, const Quiver& q, int a, int b, int i, int k) {
  std::string id = kind_name(kind);
  id += "(";
  id += q.arrows[a].name;
  if (kind == GenKind::D) {
    id += ";k=" + std::to_string(k);
  } else {
    id += "," + q.arrows[b].name + ";i=" + std::to_string(i) + ",k=" + std::to_string(k);
  }
  id += ")";
  return id;
}

}  // namespace

CaseTag classify(const Quiver& quiver, const PsiChoice& psi, int arrow) {
  if (arrow < 0 || static_cast<size_t>(arrow) >= quiver.arrows.size())
    throw Error("classify: arrow index out of range");
  const Arrow& a = quiver.arrows[arrow];
  CaseTag tag;

  if (a.is_loop()) {
    const std::string& q = a.source;
    const int chosen = psi_arrow(quiver, psi, q);
    if (chosen == arrow) {
      // A psi-chosen loop keeps its own source system (beta = the loop
      // itself); the target side stays empty.
      tag.source = SourceCase::Case1;
      tag.beta = arrow;
      return tag;
    }
    const Arrow& partner = quiver.arrows[chosen];
    tag.beta = chosen;
    tag.source = (partner.target == q) ? SourceCase::Case1 : SourceCase::Case2;
    tag.gamma = chosen;
    tag.target = (partner.target == q) ? TargetCase::Case4 : TargetCase::Case3;
    return tag;
  }

  const int at_source = psi_arrow(quiver, psi, a.source);
  if (at_source != arrow) {
    const Arrow& beta = quiver.arrows[at_source];
    tag.beta = at_source;
    // A loop partner both starts and terminates here; it counts as Case 1.
    tag.source = (beta.target == a.source) ? SourceCase::Case1 : SourceCase::Case2;
  }

  const int at_target = psi_arrow(quiver, psi, a.target);
  if (at_target != arrow) {
    const Arrow& gamma = quiver.arrows[at_target];
    tag.gamma = at_target;
    // A loop partner counts as Case 4.
    tag.target = (gamma.target == a.target) ? TargetCase::Case4 : TargetCase::Case3;
  }
  return tag;
}

std::vector<GeneratorDescriptor> build_source_system(const Quiver& quiver, int arrow,
                                                     const CaseTag& tag, int n) {
  std::vector<GeneratorDescriptor> out;
  if (tag.source == SourceCase::None) return out;
  const GenKind kind = tag.source == SourceCase::Case1 ? GenKind::P : GenKind::Rminus;
  for (const IndexPair& p : below_pairs(n)) {
    GeneratorDescriptor d;
    d.kind = kind;
    d.side = Side::Source;
    d.arrow_a = arrow;
    d.arrow_b = tag.beta;
    d.i = p.i;
    d.k = p.k;
    d.lead_arrow = arrow;
    d.lead_row = p.i;
    d.lead_col = p.k;
    d.id = make_id(kind, quiver, arrow, tag.beta, p.i, p.k);
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<GeneratorDescriptor> build_target_system(const Quiver& quiver, int arrow,
                                                     const CaseTag& tag, int n,
                                                     LoopMode mode) {
  std::vector<GeneratorDescriptor> out;
  if (tag.target == TargetCase::None) return out;
  if (quiver.arrows[arrow].is_loop() && mode == LoopMode::Paper) return out;

  if (tag.target == TargetCase::Case3) {
    // P(gamma, arrow) over pairs below the anti-diagonal; the leading
    // coordinate is the mirrored pair (i', k'), which lies above it.
    std::vector<GeneratorDescriptor> ds;
    for (const IndexPair& p : below_pairs(n)) {
      GeneratorDescriptor d;
      d.kind = GenKind::P;
      d.side = Side::Target;
      d.arrow_a = tag.gamma;
      d.arrow_b = arrow;
      d.i = p.i;
      d.k = p.k;
      d.lead_arrow = arrow;
      d.lead_row = mirror(p.i, n);
      d.lead_col = mirror(p.k, n);
      d.id = make_id(GenKind::P, quiver, tag.gamma, arrow, p.i, p.k);
      ds.push_back(std::move(d));
    }
    std::sort(ds.begin(), ds.end(), [](const auto& x, const auto& y) {
      return prec({x.lead_row, x.lead_col}, {y.lead_row, y.lead_col});
    });
    return ds;
  }

  for (const IndexPair& p : above_pairs(n)) {
    GeneratorDescriptor d;
    d.kind = GenKind::Rplus;
    d.side = Side::Target;
    d.arrow_a = tag.gamma;
    d.arrow_b = arrow;
    d.i = p.i;
    d.k = p.k;
    d.lead_arrow = arrow;
    d.lead_row = p.i;
    d.lead_col = p.k;
    d.id = make_id(GenKind::Rplus, quiver, tag.gamma, arrow, p.i, p.k);
    out.push_back(std::move(d));
  }
  return out;
}

GeneratorSystem build_system(const Quiver& quiver, const PsiChoice& psi, int n,
                             LoopMode mode) {
  GeneratorSystem sys;
  for (size_t a = 0; a < quiver.arrows.size(); ++a) {
    const int arrow = static_cast<int>(a);
    for (int k = 1; k <= n; ++k) {
      GeneratorDescriptor d;
      d.kind = GenKind::D;
      d.side = Side::Diagonal;
      d.arrow_a = arrow;
      d.k = k;
      d.lead_arrow = arrow;
      d.lead_row = k;
      d.lead_col = mirror(k, n);
      d.id = make_id(GenKind::D, quiver, arrow, -1, 0, k);
      sys.descriptors.push_back(std::move(d));
    }
    const CaseTag tag = classify(quiver, psi, arrow);
    for (auto& d : build_source_system(quiver, arrow, tag, n))
      sys.descriptors.push_back(std::move(d));
    for (auto& d : build_target_system(quiver, arrow, tag, n, mode))
      sys.descriptors.push_back(std::move(d));
  }

  std::set<std::tuple<int, int, int>> leads;
  for (const auto& d : sys.descriptors)
    if (!leads.insert({d.lead_arrow, d.lead_row, d.lead_col}).second)
      throw Error("build_system: duplicate leading coordinate for " + d.id);
  return sys;
}

int expected_count(const Quiver& quiver, const PsiChoice& psi, int n) {
  int total = 0;
  for (const Arrow& a : quiver.arrows)
    total += shape_dim(shape_of(quiver, psi, a.name), n);
  return total;
}

}  // namespace qinv
