#pragma once

#include <map>
#include <string>
#include <vector>

namespace qinv {

struct Arrow {
  std::string name;
  std::string source;
  std::string target;

  bool is_loop() const { return source == target; }
};

/// Finite directed multigraph; loops and parallel arrows are allowed.
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(const std::string& name) const {
    for (size_t t = 0; t < vertices.size(); ++t)
      if (vertices[t] == name) return static_cast<int>(t);
    return -1;
  }
  int arrow_index(const std::string& name) const {
    for (size_t t = 0; t < arrows.size(); ++t)
      if (arrows[t].name == name) return static_cast<int>(t);
    return -1;
  }
  bool incident(const Arrow& a, const std::string& v) const {
    return a.source == v || a.target == v;
  }
  std::vector<int> incident_arrows(const std::string& v) const {
    std::vector<int> out;
    for (size_t t = 0; t < arrows.size(); ++t)
      if (incident(arrows[t], v)) out.push_back(static_cast<int>(t));
    return out;
  }
};

/// Total choice of one incident arrow per vertex.
using PsiChoice = std::map<std::string, std::string>;

struct Diagnostic {
  std::string code;  // E001..E005
  std::string message;
};

/// Structural validation: vertex/arrow name sanity, arrow endpoints, psi
/// totality and incidence, and absence of isolated vertices (a vertex with
/// no incident arrow admits no psi choice).
std::vector<Diagnostic> validate(const Quiver& quiver, const PsiChoice& psi, int n);

}  // namespace qinv
