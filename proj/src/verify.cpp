#include "qinv/verify.hpp"

#include <algorithm>

#include "qinv/generators.hpp"
#include "qinv/rational.hpp"
#include "qinv/reduction.hpp"
#include "qinv/sampling.hpp"

namespace qinv {

namespace {

constexpr uint64_t kInvarianceSlot = 1;
constexpr uint64_t kTriangularitySlot = 2;
constexpr uint64_t kIndependenceSlot = 3;
constexpr uint64_t kFactorizationSlot = 4;
constexpr uint64_t kReductionSlot = 5;

std::string probability_bound(uint64_t trials, uint64_t degree_budget, uint64_t p) {
  Rational b = Rational(Integer(trials) * Integer(degree_budget)) / Rational(Integer(p));
  if (b > 1) b = Rational(1);
  return b.str();
}

template <class F>
SquareMatrix<typename F::Scalar> sample_shaped(const F& field, int n, Shape shape, Rng& rng) {
  SquareMatrix<typename F::Scalar> m(n, field.zero());
  for (const IndexPair& c : free_coordinates(shape, n)) m.at(c.i, c.k) = field.sample(rng);
  return m;
}

std::vector<Coord> ambient_coords(const Quiver& q, int n) {
  std::vector<Coord> coords;
  coords.reserve(q.arrows.size() * static_cast<size_t>(n) * n);
  for (size_t a = 0; a < q.arrows.size(); ++a)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) coords.push_back({static_cast<int>(a), i, j});
  return coords;
}

int rank_of(std::vector<std::vector<Fp>> rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows.front().size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t pivot = r;
    while (pivot < rows.size() && is_zero(rows[pivot][c])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    const Fp pv = rows[r][c];
    for (size_t t = r + 1; t < rows.size(); ++t) {
      if (is_zero(rows[t][c])) continue;
      const Fp f = rows[t][c] / pv;
      for (size_t j = c; j < cols; ++j) rows[t][j] = rows[t][j] - f * rows[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

const char* mode_name(LoopMode mode) {
  return mode == LoopMode::Paper ? "paper" : "extended";
}

int rminus_factor_sign(int i, int k, int n) {
  const int ip = mirror(i, n);
  return (ip * (k - ip)) % 2 ? -1 : 1;
}

int rplus_factor_sign(int i, int k, int n) {
  const int ip = mirror(i, n);
  return (k * (ip - k)) % 2 ? -1 : 1;
}

CheckRecord check_invariance_with(const Quiver& q, const PsiChoice& psi,
                                  const VerifyConfig& cfg,
                                  const std::vector<GeneratorDescriptor>& descriptors,
                                  bool corrupt_group) {
  (void)psi;
  const PrimeField field{cfg.prime};
  CheckRecord rec;
  rec.name = "invariance";
  rec.trials = cfg.trials;
  const uint64_t cs = derive_seed(cfg.seed, kInvarianceSlot);
  for (int t = 0; t < cfg.trials; ++t) {
    const uint64_t ts = derive_seed(cs, static_cast<uint64_t>(t));
    auto h = sample_point(field, q, cfg.n, derive_seed(ts, 0));
    auto g = sample_group(field, q, cfg.n, derive_seed(ts, 1));
    if (corrupt_group && cfg.n >= 2)
      for (auto& m : g.mats) m.at(cfg.n, 1) = field.one();
    const auto gh = act(q, g, h);
    bool ok = true;
    for (const auto& d : descriptors)
      if (!(eval_generator(d, h) == eval_generator(d, gh))) {
        ok = false;
        break;
      }
    if (ok)
      ++rec.passes;
    else if (!rec.counterexample_seed)
      rec.counterexample_seed = ts;
  }
  rec.failure_bound = probability_bound(
      static_cast<uint64_t>(cfg.trials),
      descriptors.size() * static_cast<uint64_t>(cfg.n) * (cfg.n + 1), cfg.prime);
  return rec;
}

CheckRecord check_invariance(const Quiver& q, const PsiChoice& psi, const VerifyConfig& cfg) {
  return check_invariance_with(q, psi, cfg,
                               build_system(q, psi, cfg.n, cfg.mode).descriptors, false);
}

CheckRecord check_triangularity_with(const Quiver& q, const PsiChoice& psi,
                                     const VerifyConfig& cfg,
                                     const std::vector<GeneratorDescriptor>& descriptors) {
  const PrimeField field{cfg.prime};
  const SectionSpec spec = make_section(q, psi, cfg.n);
  CheckRecord rec;
  rec.name = "triangularity";
  rec.trials = static_cast<int>(descriptors.size());
  const uint64_t cs = derive_seed(cfg.seed, kTriangularitySlot);
  for (size_t t = 0; t < descriptors.size(); ++t) {
    const auto& d = descriptors[t];
    const uint64_t ts = derive_seed(cs, t);
    const Coord lead{d.lead_arrow, d.lead_row, d.lead_col};
    const IndexPair lead_pair{d.lead_row, d.lead_col};
    bool ok = false;
    for (int attempt = 0; attempt < 5; ++attempt) {
      auto h = sample_section_point(field, q, spec, derive_seed(ts, attempt));
      const Fp slope = partial(d, h, lead);
      if (is_zero(slope)) continue;  // degenerate sample, retry

      auto h2 = h;
      auto& entry = h2.mats[static_cast<size_t>(lead.arrow)].at(lead.row, lead.col);
      entry = entry + field.one();
      const Fp slope2 = partial(d, h2, lead);
      const Fp f0 = eval_generator(d, h);
      const Fp f1 = eval_generator(d, h2);
      bool pass = (slope == slope2) && (f1 - f0 == slope);

      if (pass) {
        // T2 ranges over the free coordinates of the arrow's shape: the
        // restriction to the section is a function of those alone, and
        // transversal directions are quotiented out.
        const Shape own = spec.shapes[static_cast<size_t>(d.lead_arrow)];
        for (const IndexPair& c : free_coordinates(own, cfg.n)) {
          if (c.k == mirror(c.i, cfg.n)) continue;        // anti-diagonal exempt
          if (!prec(lead_pair, c)) continue;              // only beyond the leading coord
          if (!is_zero(partial(d, h, {d.lead_arrow, c.i, c.k}))) {
            pass = false;
            break;
          }
        }
      }
      ok = pass;
      break;
    }
    if (ok)
      ++rec.passes;
    else if (!rec.counterexample_seed)
      rec.counterexample_seed = ts;
  }
  rec.failure_bound = probability_bound(descriptors.size() * 5ULL,
                                        static_cast<uint64_t>(cfg.n), cfg.prime);
  return rec;
}

CheckRecord check_triangularity(const Quiver& q, const PsiChoice& psi, const VerifyConfig& cfg) {
  return check_triangularity_with(q, psi, cfg,
                                  build_system(q, psi, cfg.n, cfg.mode).descriptors);
}

CheckRecord check_independence_with(const Quiver& q, const PsiChoice& psi,
                                    const VerifyConfig& cfg,
                                    const std::vector<GeneratorDescriptor>& descriptors) {
  (void)psi;
  const PrimeField field{cfg.prime};
  CheckRecord rec;
  rec.name = "independence";
  rec.trials = 1;
  const uint64_t cs = derive_seed(cfg.seed, kIndependenceSlot);
  const auto point = sample_point(field, q, cfg.n, derive_seed(cs, 0));
  const auto coords = ambient_coords(q, cfg.n);
  std::vector<std::vector<Fp>> jacobian;
  jacobian.reserve(descriptors.size());
  for (const auto& d : descriptors) jacobian.push_back(partials(d, point, coords));
  const int rank = rank_of(std::move(jacobian));
  if (rank == static_cast<int>(descriptors.size()))
    rec.passes = 1;
  else
    rec.counterexample_seed = derive_seed(cs, 0);
  rec.failure_bound = probability_bound(
      1, descriptors.size() * static_cast<uint64_t>(cfg.n), cfg.prime);
  return rec;
}

CheckRecord check_independence(const Quiver& q, const PsiChoice& psi, const VerifyConfig& cfg) {
  return check_independence_with(q, psi, cfg,
                                 build_system(q, psi, cfg.n, cfg.mode).descriptors);
}

CheckRecord check_coverage(const Quiver& q, const PsiChoice& psi, const VerifyConfig& cfg) {
  CheckRecord rec;
  rec.name = "coverage";
  rec.trials = 1;
  const auto sys = build_system(q, psi, cfg.n, cfg.mode);
  if (static_cast<int>(sys.descriptors.size()) == expected_count(q, psi, cfg.n)) rec.passes = 1;
  rec.failure_bound = "0";
  return rec;
}

CheckRecord check_factorizations(const VerifyConfig& cfg) {
  const PrimeField field{cfg.prime};
  const int n = cfg.n;
  CheckRecord rec;
  rec.name = "factorizations";
  rec.trials = cfg.trials;
  const uint64_t cs = derive_seed(cfg.seed, kFactorizationSlot);
  const auto below = below_pairs(n);
  const auto above = above_pairs(n);
  for (int t = 0; t < cfg.trials; ++t) {
    const uint64_t ts = derive_seed(cs, static_cast<uint64_t>(t));
    Rng rng(ts);
    const auto x = sample_matrix(field, n, rng);
    const auto lower = sample_shaped(field, n, Shape::LowerAnti, rng);
    const auto upper = sample_shaped(field, n, Shape::UpperAnti, rng);
    bool ok = true;

    for (const IndexPair& p : below) {
      const int i = p.i, k = p.k, ip = mirror(i, n);
      // P(X, S-) = minor_m(X, i, k) * D_k(S-)
      if (!(eval_P(x, lower, i, k) == minor_m(x, i, k) * corner_minor(lower, k))) ok = false;
      // R-(X, S+) = +- minor(X; [i,n] x [k-i'+1,k]) * D_{k'+i'}(S+)
      Fp rhs2 = minor_of(x, index_range(i, n), index_range(k - ip + 1, k)) *
                corner_minor(upper, mirror(k, n) + ip);
      if (rminus_factor_sign(i, k, n) < 0) rhs2 = -rhs2;
      if (!(eval_Rminus(x, upper, i, k) == rhs2)) ok = false;
      // P(S+, X) = D_i(S+) * minor_n(X, i', k)
      if (!(eval_P(upper, x, i, k) == corner_minor(upper, i) * minor_n(x, ip, k))) ok = false;
      if (!ok) break;
    }
    if (ok)
      for (const IndexPair& p : above) {
        const int i = p.i, k = p.k;
        // R+(S-, X) = +- D_{i+k}(S-) * minor(X; [i,i+k-1] x [1,k])
        Fp rhs4 = corner_minor(lower, i + k) *
                  minor_of(x, index_range(i, i + k - 1), index_range(1, k));
        if (rplus_factor_sign(i, k, n) < 0) rhs4 = -rhs4;
        if (!(eval_Rplus(lower, x, i, k) == rhs4)) {
          ok = false;
          break;
        }
      }

    if (ok)
      ++rec.passes;
    else if (!rec.counterexample_seed)
      rec.counterexample_seed = ts;
  }
  const uint64_t identities = (3 * below.size() + above.size());
  rec.failure_bound = probability_bound(static_cast<uint64_t>(cfg.trials),
                                        identities * 2ULL * n, cfg.prime);
  return rec;
}

CheckRecord check_reduction(const Quiver& q, const PsiChoice& psi, const VerifyConfig& cfg) {
  const RationalField field;
  CheckRecord rec;
  rec.name = "reduction";
  rec.trials = cfg.trials;
  rec.failure_bound = "0";
  const SectionSpec spec = make_section(q, psi, cfg.n);
  const auto sys = build_system(q, psi, cfg.n, cfg.mode);
  const uint64_t cs = derive_seed(cfg.seed, kReductionSlot);
  for (int t = 0; t < cfg.trials; ++t) {
    const uint64_t ts = derive_seed(cs, static_cast<uint64_t>(t));
    const auto h = sample_omega_point(field, q, cfg.n, ts);
    const auto g = reduce_to_section(q, psi, h);
    const auto gh = act(q, g, h);
    bool ok = project_membership(gh, spec);
    for (const auto& m : g.mats)
      if (!is_unitriangular(m)) ok = false;
    if (ok)
      for (size_t a = 0; a < q.arrows.size() && ok; ++a)
        for (int k = 1; k <= cfg.n && ok; ++k)
          ok = (corner_minor(h.mats[a], k) == corner_minor(gh.mats[a], k));
    if (ok)
      for (const auto& d : sys.descriptors)
        if (!(eval_generator(d, h) == eval_generator(d, gh))) {
          ok = false;
          break;
        }
    if (ok)
      ++rec.passes;
    else if (!rec.counterexample_seed)
      rec.counterexample_seed = ts;
  }
  return rec;
}

VerificationReport run_all(const Quiver& q, const PsiChoice& psi, const VerifyConfig& cfg) {
  VerificationReport report;
  report.config = cfg;
  const auto sys = build_system(q, psi, cfg.n, cfg.mode);
  report.checks.push_back(check_invariance_with(q, psi, cfg, sys.descriptors, false));
  report.checks.push_back(check_triangularity_with(q, psi, cfg, sys.descriptors));
  report.checks.push_back(check_independence_with(q, psi, cfg, sys.descriptors));
  report.checks.push_back(check_coverage(q, psi, cfg));
  report.checks.push_back(check_factorizations(cfg));
  report.checks.push_back(check_reduction(q, psi, cfg));
  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckRecord& r) { return r.passed(); });
  return report;
}

}  // namespace qinv
