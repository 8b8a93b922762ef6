#include "qinv/sampling.hpp"

namespace qinv {

std::pair<Quiver, PsiChoice> sample_quiver(uint64_t seed, int max_vertices, int max_arrows) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Quiver q;
    const int nv = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_vertices)));
    for (int v = 1; v <= nv; ++v) q.vertices.push_back("v" + std::to_string(v));
    int na = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_arrows)));
    if (na < (nv + 1) / 2) na = (nv + 1) / 2;  // too few arrows cannot cover all vertices
    for (int a = 1; a <= na; ++a) {
      const auto s = q.vertices[rng.below(static_cast<uint64_t>(nv))];
      const auto t = q.vertices[rng.below(static_cast<uint64_t>(nv))];
      q.arrows.push_back({"a" + std::to_string(a), s, t});
    }
    bool covered = true;
    for (const auto& v : q.vertices)
      if (q.incident_arrows(v).empty()) {
        covered = false;
        break;
      }
    if (!covered) continue;
    PsiChoice psi;
    for (const auto& v : q.vertices) {
      const auto inc = q.incident_arrows(v);
      psi[v] = q.arrows[inc[rng.below(inc.size())]].name;
    }
    return {q, psi};
  }
  throw Error("sample_quiver: could not cover all vertices");
}

}  // namespace qinv
