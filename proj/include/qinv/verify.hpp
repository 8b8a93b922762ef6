#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qinv/assembly.hpp"
#include "qinv/quiver.hpp"

namespace qinv {

struct CheckRecord {
  std::string name;
  int trials = 0;
  int passes = 0;
  std::optional<uint64_t> counterexample_seed;
  std::string failure_bound;  // exact rational; "0" for non-probabilistic checks

  bool passed() const { return passes == trials; }
};

struct VerifyConfig {
  int n = 3;
  uint64_t prime = 2147483647ULL;
  uint64_t seed = 0;
  int trials = 100;
  LoopMode mode = LoopMode::Extended;
};

struct VerificationReport {
  VerifyConfig config;
  std::vector<CheckRecord> checks;
  bool pass = false;
};

/// Every generator value is preserved under random unitriangular actions.
CheckRecord check_invariance(const Quiver& q, const PsiChoice& psi, const VerifyConfig& cfg);

/// Same check against an explicit descriptor list; `corrupt_group` spoils
/// the sampled group elements below the diagonal (sensitivity control).
CheckRecord check_invariance_with(const Quiver& q, const PsiChoice& psi,
                                  const VerifyConfig& cfg,
                                  const std::vector<GeneratorDescriptor>& descriptors,
                                  bool corrupt_group = false);

/// T1: each generator is affine in its leading coordinate on random section
/// points, with nonzero slope (up to 5 resamples).  T2: zero partials with
/// respect to every off-anti-diagonal own-arrow coordinate beyond the
/// leading one.
CheckRecord check_triangularity(const Quiver& q, const PsiChoice& psi, const VerifyConfig& cfg);
CheckRecord check_triangularity_with(const Quiver& q, const PsiChoice& psi,
                                     const VerifyConfig& cfg,
                                     const std::vector<GeneratorDescriptor>& descriptors);

/// Jacobian rank at one random point equals the generator count.  A
/// full-rank witness proves independence outright; rank can only drop on a
/// proper subvariety.
CheckRecord check_independence(const Quiver& q, const PsiChoice& psi, const VerifyConfig& cfg);
CheckRecord check_independence_with(const Quiver& q, const PsiChoice& psi,
                                    const VerifyConfig& cfg,
                                    const std::vector<GeneratorDescriptor>& descriptors);

/// Generator count equals the section dimension (fails for paper-mode
/// systems when a loop lies outside the psi image).
CheckRecord check_coverage(const Quiver& q, const PsiChoice& psi, const VerifyConfig& cfg);

/// The four restricted-partner factorization identities at random shaped
/// points, all admissible index pairs.
CheckRecord check_factorizations(const VerifyConfig& cfg);

/// Reduction round-trip over exact rationals: section membership, corner
/// minors, and generator values all preserved.
CheckRecord check_reduction(const Quiver& q, const PsiChoice& psi, const VerifyConfig& cfg);

/// All checks in fixed order with seeds derived from the master seed.
VerificationReport run_all(const Quiver& q, const PsiChoice& psi, const VerifyConfig& cfg);

/// Block-permutation signs in the R-/R+ factorizations; pinned against the
/// brute-force oracle tables for n <= 5 in the test suite.
int rminus_factor_sign(int i, int k, int n);
int rplus_factor_sign(int i, int k, int n);

const char* mode_name(LoopMode mode);

}  // namespace qinv
