#include "qinv/quiver.hpp"

#include <set>

namespace qinv {

std::vector<Diagnostic> validate(const Quiver& quiver, const PsiChoice& psi, int n) {
  std::vector<Diagnostic> out;
  if (n < 1) out.push_back({"E005", "n must be a positive integer"});

  std::set<std::string> vset;
  for (const auto& v : quiver.vertices)
    if (!vset.insert(v).second)
      out.push_back({"E005", "duplicate vertex '" + v + "'"});
  std::set<std::string> aset;
  for (const auto& a : quiver.arrows)
    if (!aset.insert(a.name).second)
      out.push_back({"E005", "duplicate arrow '" + a.name + "'"});

  for (const auto& a : quiver.arrows) {
    if (quiver.vertex_index(a.source) < 0)
      out.push_back({"E001", "arrow '" + a.name + "': unknown vertex '" + a.source + "'"});
    if (quiver.vertex_index(a.target) < 0)
      out.push_back({"E001", "arrow '" + a.name + "': unknown vertex '" + a.target + "'"});
  }

  for (const auto& [v, an] : psi) {
    if (quiver.vertex_index(v) < 0) {
      out.push_back({"E001", "psi: unknown vertex '" + v + "'"});
      continue;
    }
    const int ai = quiver.arrow_index(an);
    if (ai < 0) {
      out.push_back({"E005", "psi: unknown arrow '" + an + "'"});
      continue;
    }
    if (!quiver.incident(quiver.arrows[ai], v))
      out.push_back({"E002", "psi not incident: arrow '" + an + "' does not touch vertex '" + v + "'"});
  }

  for (const auto& v : quiver.vertices) {
    if (quiver.incident_arrows(v).empty())
      out.push_back({"E004", "vertex '" + v + "' has no incident arrow"});
    else if (psi.find(v) == psi.end())
      out.push_back({"E003", "missing psi for vertex '" + v + "'"});
  }

  return out;
}

}  // namespace qinv
