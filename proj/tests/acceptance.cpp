// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qinv/assembly.hpp"
#include "qinv/generators.hpp"
#include "qinv/io.hpp"
#include "qinv/reduction.hpp"
#include "qinv/verify.hpp"

using namespace qinv;
using namespace qinv::testing;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (detail.empty()) detail = why;
  }
};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool report(int number, const std::string& title, const Outcome& o, double ms) {
  std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << title
            << " (" << static_cast<long>(ms) << " ms)";
  if (!o.pass) std::cout << " -- " << o.detail;
  std::cout << "\n";
  return o.pass;
}

// ---- criterion 1: the twelve displayed specialization identities ----
Outcome criterion1() {
  Outcome o;
  const RationalField field;
  const int n = 3;
  for (int t = 0; t < 20; ++t) {
    Rng rng(derive_seed(111, t));
    const auto x = sample_matrix(field, n, rng);
    const auto sm = shaped_sample(field, n, Shape::LowerAnti, rng);
    const auto sp = shaped_sample(field, n, Shape::UpperAnti, rng);
    const auto det2 = [](const Rational& a, const Rational& b, const Rational& c,
                         const Rational& d) { return a * d - b * c; };

    const bool ok =
        // P(X, S-) specializations
        eval_P(x, sm, 3, 2) == corner_minor(sm, 2) * x.at(3, 2) &&
        eval_P(x, sm, 3, 3) == corner_minor(sm, 3) * x.at(3, 3) &&
        eval_P(x, sm, 2, 3) ==
            corner_minor(sm, 3) * det2(x.at(2, 1), x.at(2, 3), x.at(3, 1), x.at(3, 3)) &&
        // R-(X, S+) specializations
        eval_Rminus(x, sp, 3, 2) == -(corner_minor(sp, 3) * x.at(3, 2)) &&
        eval_Rminus(x, sp, 3, 3) == corner_minor(sp, 2) * x.at(3, 3) &&
        eval_Rminus(x, sp, 2, 3) ==
            corner_minor(sp, 3) * det2(x.at(2, 2), x.at(2, 3), x.at(3, 2), x.at(3, 3)) &&
        // P(S+, X) specializations
        eval_P(sp, x, 3, 2) ==
            corner_minor(sp, 3) * det2(x.at(1, 1), x.at(1, 2), x.at(3, 1), x.at(3, 2)) &&
        eval_P(sp, x, 3, 3) == corner_minor(sp, 3) * x.at(1, 1) &&
        eval_P(sp, x, 2, 3) == corner_minor(sp, 2) * x.at(2, 1) &&
        // R+(S-, X) specializations
        eval_Rplus(sm, x, 1, 1) == corner_minor(sm, 2) * x.at(1, 1) &&
        eval_Rplus(sm, x, 1, 2) ==
            corner_minor(sm, 3) * det2(x.at(1, 1), x.at(1, 2), x.at(2, 1), x.at(2, 2)) &&
        eval_Rplus(sm, x, 2, 1) == -(corner_minor(sm, 3) * x.at(2, 1));
    if (!ok) o.fail("identity mismatch at point " + std::to_string(t));
  }
  return o;
}

// ---- criterion 2: demo-quiver section and system structure ----
Outcome criterion2() {
  Outcome o;
  const Quiver q = demo_quiver();
  const PsiChoice psi = demo_psi();
  const int n = 3;
  const auto spec = make_section(q, psi, n);
  if (spec.shapes != std::vector<Shape>{Shape::LowerAnti, Shape::Full, Shape::UpperAnti,
                                        Shape::AntiDiag})
    o.fail("section shapes differ");

  const auto sys = build_system(q, psi, n, LoopMode::Extended);
  const int family = n * (n - 1) / 2;
  int p11 = 0, rm24 = 0, rp12 = 0, p43 = 0, d = 0, a4_nond = 0, other = 0;
  for (const auto& g : sys.descriptors) {
    if (g.kind == GenKind::D) {
      ++d;
      continue;
    }
    if (g.lead_arrow == 3) ++a4_nond;
    if (g.kind == GenKind::P && g.side == Side::Source && g.arrow_a == 0 && g.arrow_b == 0)
      ++p11;
    else if (g.kind == GenKind::Rminus && g.arrow_a == 1 && g.arrow_b == 3)
      ++rm24;
    else if (g.kind == GenKind::Rplus && g.arrow_a == 0 && g.arrow_b == 1)
      ++rp12;
    else if (g.kind == GenKind::P && g.side == Side::Target && g.arrow_a == 3 && g.arrow_b == 2)
      ++p43;
    else
      ++other;
  }
  if (d != 4 * n) o.fail("wrong number of corner-minor generators");
  if (p11 != family) o.fail("P(a1,a1) family wrong");
  if (rm24 != family) o.fail("R-(a2,a4) family wrong");
  if (rp12 != family) o.fail("R+(a1,a2) family wrong");
  if (p43 != family) o.fail("P(a4,a3) family wrong");
  if (a4_nond != 0) o.fail("a4 should carry no source/target system");
  if (other != 0) o.fail("unexpected descriptors present");
  return o;
}

std::vector<std::pair<std::pair<Quiver, PsiChoice>, int>> criterion3_quivers() {
  std::vector<std::pair<std::pair<Quiver, PsiChoice>, int>> out;
  for (int t = 0; t < 10; ++t)
    out.push_back({sample_quiver(derive_seed(31337, t)), (t % 4) + 1});
  return out;
}

// ---- criterion 3: invariance over ten random quivers ----
Outcome criterion3() {
  Outcome o;
  bool saw_loop = false, saw_multi = false;
  int idx = 0;
  for (const auto& [qp, n] : criterion3_quivers()) {
    const auto& [q, psi] = qp;
    for (const auto& a : q.arrows) saw_loop = saw_loop || a.is_loop();
    for (size_t x = 0; x < q.arrows.size(); ++x)
      for (size_t y = x + 1; y < q.arrows.size(); ++y)
        saw_multi = saw_multi || (q.arrows[x].source == q.arrows[y].source &&
                                  q.arrows[x].target == q.arrows[y].target);
    VerifyConfig cfg;
    cfg.n = n;
    cfg.trials = 100;
    cfg.seed = derive_seed(1, idx);
    const auto rec = check_invariance(q, psi, cfg);
    if (!rec.passed())
      o.fail("quiver " + std::to_string(idx) + ": " + std::to_string(rec.passes) + "/" +
             std::to_string(rec.trials));
    ++idx;
  }
  if (!saw_loop) o.fail("random quiver set contains no loop");
  if (!saw_multi) o.fail("random quiver set contains no parallel arrows");
  return o;
}

// ---- criterion 4: Jacobian rank equals count equals section dimension ----
Outcome criterion4() {
  Outcome o;
  int idx = 0;
  for (const auto& [qp, n] : criterion3_quivers()) {
    const auto& [q, psi] = qp;
    VerifyConfig cfg;
    cfg.n = n;
    cfg.seed = derive_seed(2, idx);
    const auto sys = build_system(q, psi, n, LoopMode::Extended);
    if (static_cast<int>(sys.descriptors.size()) != expected_count(q, psi, n))
      o.fail("count differs from section dimension on quiver " + std::to_string(idx));
    if (!check_independence(q, psi, cfg).passed())
      o.fail("rank deficiency on quiver " + std::to_string(idx));
    ++idx;
  }
  return o;
}

// ---- criterion 5: triangularity for every generator, n <= 4 ----
Outcome criterion5() {
  Outcome o;
  std::vector<std::pair<std::pair<Quiver, PsiChoice>, int>> cases = criterion3_quivers();
  cases.push_back({{demo_quiver(), demo_psi()}, 3});
  cases.push_back({{two_loop_quiver(), two_loop_psi()}, 2});
  int idx = 0;
  for (const auto& [qp, n] : cases) {
    const auto& [q, psi] = qp;
    VerifyConfig cfg;
    cfg.n = n;
    cfg.seed = derive_seed(3, idx);
    const auto rec = check_triangularity(q, psi, cfg);
    if (!rec.passed())
      o.fail("quiver " + std::to_string(idx) + ": " + std::to_string(rec.passes) + "/" +
             std::to_string(rec.trials) + " generators");
    ++idx;
  }
  return o;
}

// ---- criterion 6: reduction round-trip over exact rationals ----
Outcome criterion6() {
  Outcome o;
  VerifyConfig cfg;
  cfg.n = 3;
  cfg.trials = 100;
  cfg.seed = 6;
  const auto rec = check_reduction(demo_quiver(), demo_psi(), cfg);
  if (!rec.passed())
    o.fail(std::to_string(rec.passes) + "/" + std::to_string(rec.trials) + " round trips");
  return o;
}

// ---- criterion 7: the documented paper-mode coverage gap ----
Outcome criterion7() {
  Outcome o;
  const Quiver q = two_loop_quiver();
  const PsiChoice psi = two_loop_psi();
  VerifyConfig cfg;
  cfg.n = 2;
  cfg.seed = 7;

  cfg.mode = LoopMode::Paper;
  const auto paper = build_system(q, psi, 2, LoopMode::Paper);
  if (paper.descriptors.size() != 6) o.fail("paper-mode count is not 6");
  if (!check_independence(q, psi, cfg).passed()) o.fail("paper-mode rank deficient");
  if (check_coverage(q, psi, cfg).passed()) o.fail("paper-mode coverage unexpectedly full");
  if (expected_count(q, psi, 2) != 7) o.fail("section dimension is not 7");

  cfg.mode = LoopMode::Extended;
  const auto ext = build_system(q, psi, 2, LoopMode::Extended);
  if (ext.descriptors.size() != 7) o.fail("extended-mode count is not 7");
  if (!check_independence(q, psi, cfg).passed()) o.fail("extended-mode rank deficient");
  if (!check_coverage(q, psi, cfg).passed()) o.fail("extended-mode coverage incomplete");
  return o;
}

// ---- criterion 8: byte-identical verify reports through the CLI ----
Outcome criterion8() {
  Outcome o;
  const char* cli = std::getenv("QINV_CLI");
  if (!cli) {
    o.fail("QINV_CLI not set");
    return o;
  }
  const fs::path dir = fs::temp_directory_path() / ("qinv_accept_" + std::to_string(getpid()));
  fs::create_directories(dir);
  const fs::path quiver = dir / "demo.quiver";
  {
    std::ofstream out(quiver);
    out << demo_quiver_text(2);
  }
  const auto run_once = [&](const fs::path& out) {
    const std::string cmd = std::string(cli) + " verify " + quiver.string() +
                            " --trials 25 --seed 12345 >" + out.string() + " 2>/dev/null";
    return WEXITSTATUS(std::system(cmd.c_str()));
  };
  const fs::path o1 = dir / "r1.json", o2 = dir / "r2.json";
  if (run_once(o1) != 0) o.fail("first verify run failed");
  if (run_once(o2) != 0) o.fail("second verify run failed");
  const auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  };
  const std::string b1 = slurp(o1), b2 = slurp(o2);
  if (b1.empty() || b1 != b2) o.fail("reports differ between runs");
  return o;
}

template <class Fn>
bool timed(int number, const std::string& title, Fn fn, double budget_ms) {
  const auto start = Clock::now();
  Outcome o = fn();
  const double ms = ms_since(start);
  if (budget_ms > 0 && ms > budget_ms)
    o.fail("exceeded time budget of " + std::to_string(static_cast<long>(budget_ms)) + " ms");
  return report(number, title, o, ms);
}

}  // namespace

int main() {
  bool all = true;
  all &= timed(1, "twelve specialization identities, 20 rational points each", criterion1, 1000);
  all &= timed(2, "demo quiver section and generator structure", criterion2, 0);
  all &= timed(3, "invariance on 10 random quivers, 100 trials each", criterion3, 60000);
  all &= timed(4, "Jacobian rank = generator count = section dimension", criterion4, 0);
  all &= timed(5, "triangularity T1+T2 for every generator, n <= 4", criterion5, 0);
  all &= timed(6, "reduction round-trip, 100 rational points", criterion6, 30000);
  all &= timed(7, "two-loop paper/extended coverage gap", criterion7, 0);
  all &= timed(8, "byte-identical verify reports", criterion8, 0);
  std::cout << (all ? "ACCEPTANCE: all criteria pass\n" : "ACCEPTANCE: FAILURES PRESENT\n");
  return all ? 0 : 1;
}
