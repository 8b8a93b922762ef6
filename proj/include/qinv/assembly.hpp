#pragma once

#include <string>
#include <vector>

#include "qinv/generators.hpp"
#include "qinv/quiver.hpp"
#include "qinv/section.hpp"

namespace qinv {

enum class SourceCase { None, Case1, Case2 };
enum class TargetCase { None, Case3, Case4 };

/// Classification of an arrow's two ends against the psi choice.
/// Source side, beta = psi(s(a)): Case1 if beta terminates at s(a) (loops
/// included, beta = a included), Case2 if beta starts at s(a) and is not a
/// loop; None exactly when a is a non-loop with a = psi(s(a)).  Target
/// side, gamma = psi(t(a)): Case4 if gamma terminates at t(a) (loops
/// included), Case3 if gamma starts there and is not a loop; None when
/// a = psi(t(a)).
struct CaseTag {
  SourceCase source = SourceCase::None;
  TargetCase target = TargetCase::None;
  int beta = -1;
  int gamma = -1;
};

/// Loop handling for the target-side system.  Paper mode drops the target
/// system of every loop; extended mode keeps it for loops that are not the
/// psi choice at their vertex, which makes the leading-coordinate map onto
/// the section coordinates.
enum class LoopMode { Paper, Extended };

CaseTag classify(const Quiver& quiver, const PsiChoice& psi, int arrow);

std::vector<GeneratorDescriptor> build_source_system(const Quiver& quiver, int arrow,
                                                     const CaseTag& tag, int n);
std::vector<GeneratorDescriptor> build_target_system(const Quiver& quiver, int arrow,
                                                     const CaseTag& tag, int n, LoopMode mode);

struct GeneratorSystem {
  std::vector<GeneratorDescriptor> descriptors;
};

/// Full system: per arrow, the n corner-minor invariants (leading
/// coordinates on the anti-diagonal), the source system (below), and the
/// target system (above).  The leading-coordinate map is injective; in
/// extended mode it is a bijection onto the section's free coordinates.
GeneratorSystem build_system(const Quiver& quiver, const PsiChoice& psi, int n, LoopMode mode);

/// Sum of section dimensions: the generator count of a full system.
int expected_count(const Quiver& quiver, const PsiChoice& psi, int n);

/// Index pairs strictly below the anti-diagonal (i' < k), ascending by prec.
std::vector<IndexPair> below_pairs(int n);
/// Index pairs strictly above the anti-diagonal (i' > k), ascending by prec.
std::vector<IndexPair> above_pairs(int n);

}  // namespace qinv
