// qinv: construct, evaluate, and verify free generator systems of
// unitriangular invariant fields for equidimensional quiver representations.
//
// Exit codes: 0 success, 1 semantic failure, 2 parse/arity error,
// 3 point outside Omega.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "qinv/generators.hpp"
#include "qinv/io.hpp"
#include "qinv/reduction.hpp"
#include "qinv/section.hpp"
#include "qinv/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitParse = 2;
constexpr int kExitOmega = 3;

struct Loaded {
  qinv::ParsedQuiver pq;
};

// Parses and validates; on failure prints diagnostics and returns an exit
// code through `status`.
bool load_quiver(const std::string& path, Loaded& out, int& status) {
  try {
    out.pq = qinv::parse_quiver_text(qinv::read_file(path));
  } catch (const qinv::ParseError& e) {
    std::cerr << "E005 " << e.what() << "\n";
    status = kExitParse;
    return false;
  } catch (const qinv::Error& e) {
    std::cerr << "E005 " << e.what() << "\n";
    status = kExitParse;
    return false;
  }
  const auto diags = qinv::validate(out.pq.quiver, out.pq.psi, out.pq.n);
  if (!diags.empty()) {
    for (const auto& d : diags) std::cerr << d.code << " " << d.message << "\n";
    status = kExitSemantic;
    return false;
  }
  status = kExitOk;
  return true;
}

qinv::LoopMode parse_mode(const std::string& mode) {
  if (mode == "paper") return qinv::LoopMode::Paper;
  if (mode == "extended") return qinv::LoopMode::Extended;
  throw CLI::ValidationError("--mode must be 'paper' or 'extended'");
}

int cmd_validate(const std::string& quiver_path) {
  Loaded l;
  int status = kExitOk;
  if (!load_quiver(quiver_path, l, status)) return status;
  std::cout << "ok\n";
  return kExitOk;
}

int cmd_section(const std::string& quiver_path, const std::string& format) {
  Loaded l;
  int status = kExitOk;
  if (!load_quiver(quiver_path, l, status)) return status;
  const auto spec = qinv::make_section(l.pq.quiver, l.pq.psi, l.pq.n);
  if (format == "json") {
    qinv::ordered_json rows = qinv::ordered_json::array();
    for (size_t a = 0; a < l.pq.quiver.arrows.size(); ++a)
      rows.push_back({{"arrow", l.pq.quiver.arrows[a].name},
                      {"shape", qinv::shape_name(spec.shapes[a])},
                      {"dim", qinv::shape_dim(spec.shapes[a], spec.n)}});
    std::cout << qinv::ordered_json({{"n", spec.n}, {"arrows", rows}, {"dim_total", spec.dim_total()}})
                     .dump(2)
              << "\n";
  } else {
    for (size_t a = 0; a < l.pq.quiver.arrows.size(); ++a)
      std::cout << l.pq.quiver.arrows[a].name << " " << qinv::shape_name(spec.shapes[a]) << " "
                << qinv::shape_dim(spec.shapes[a], spec.n) << "\n";
    std::cout << "total " << spec.dim_total() << "\n";
  }
  return kExitOk;
}

int cmd_generators(const std::string& quiver_path, qinv::LoopMode mode,
                   const std::string& format) {
  Loaded l;
  int status = kExitOk;
  if (!load_quiver(quiver_path, l, status)) return status;
  const auto sys = qinv::build_system(l.pq.quiver, l.pq.psi, l.pq.n, mode);
  for (const auto& d : sys.descriptors) {
    if (format == "text") {
      std::cout << d.id << " side=" << qinv::side_name(d.side) << " leading="
                << l.pq.quiver.arrows[static_cast<size_t>(d.lead_arrow)].name << "["
                << d.lead_row << "," << d.lead_col << "]\n";
    } else {
      std::cout << qinv::descriptor_to_json(d, l.pq.quiver).dump() << "\n";
    }
  }
  return kExitOk;
}

int cmd_count(const std::string& quiver_path, qinv::LoopMode mode, const std::string& format) {
  Loaded l;
  int status = kExitOk;
  if (!load_quiver(quiver_path, l, status)) return status;
  const auto sys = qinv::build_system(l.pq.quiver, l.pq.psi, l.pq.n, mode);
  std::map<int, int> per_arrow;
  for (const auto& d : sys.descriptors) ++per_arrow[d.lead_arrow];
  if (format == "json") {
    qinv::ordered_json rows = qinv::ordered_json::array();
    for (size_t a = 0; a < l.pq.quiver.arrows.size(); ++a)
      rows.push_back({{"arrow", l.pq.quiver.arrows[a].name},
                      {"count", per_arrow.count(static_cast<int>(a)) ? per_arrow[static_cast<int>(a)] : 0}});
    std::cout << qinv::ordered_json(
                     {{"arrows", rows}, {"total", static_cast<int>(sys.descriptors.size())}})
                     .dump(2)
              << "\n";
  } else {
    for (size_t a = 0; a < l.pq.quiver.arrows.size(); ++a)
      std::cout << l.pq.quiver.arrows[a].name << " "
                << (per_arrow.count(static_cast<int>(a)) ? per_arrow[static_cast<int>(a)] : 0)
                << "\n";
    std::cout << "total " << sys.descriptors.size() << "\n";
  }
  return kExitOk;
}

int cmd_eval(const std::string& quiver_path, const std::string& point_path,
             qinv::LoopMode mode) {
  Loaded l;
  int status = kExitOk;
  if (!load_quiver(quiver_path, l, status)) return status;
  qinv::RepPoint<qinv::Rational> h;
  try {
    h = qinv::parse_point_text(qinv::read_file(point_path), l.pq.quiver, l.pq.n);
  } catch (const qinv::Error& e) {
    std::cerr << "E005 " << e.what() << "\n";
    return kExitParse;
  }
  const auto sys = qinv::build_system(l.pq.quiver, l.pq.psi, l.pq.n, mode);
  for (const auto& d : sys.descriptors)
    std::cout << d.id << " " << qinv::scalar_str(qinv::eval_generator(d, h)) << "\n";
  return kExitOk;
}

int cmd_reduce(const std::string& quiver_path, const std::string& point_path) {
  Loaded l;
  int status = kExitOk;
  if (!load_quiver(quiver_path, l, status)) return status;
  qinv::RepPoint<qinv::Rational> h;
  try {
    h = qinv::parse_point_text(qinv::read_file(point_path), l.pq.quiver, l.pq.n);
  } catch (const qinv::Error& e) {
    std::cerr << "E005 " << e.what() << "\n";
    return kExitParse;
  }
  try {
    const auto g = qinv::reduce_to_section(l.pq.quiver, l.pq.psi, h);
    const auto gh = qinv::act(l.pq.quiver, g, h);
    const auto spec = qinv::make_section(l.pq.quiver, l.pq.psi, l.pq.n);
    std::cout << "# group\n" << qinv::group_to_text(l.pq.quiver, g);
    std::cout << "# reduced point\n" << qinv::point_to_text(l.pq.quiver, gh);
    std::cout << "# shapes\n";
    for (size_t a = 0; a < l.pq.quiver.arrows.size(); ++a) {
      const bool ok = qinv::shape_member(gh.mats[a], spec.shapes[a]);
      std::cout << "# shape " << l.pq.quiver.arrows[a].name << " "
                << qinv::shape_name(spec.shapes[a]) << (ok ? " ok" : " FAIL") << "\n";
      if (!ok) return kExitSemantic;
    }
    return kExitOk;
  } catch (const qinv::OmegaError& e) {
    std::cerr << e.what() << "\n";
    return kExitOmega;
  }
}

int cmd_verify(const std::string& quiver_path, int trials, uint64_t seed, uint64_t prime,
               qinv::LoopMode mode, const std::string& format) {
  Loaded l;
  int status = kExitOk;
  if (!load_quiver(quiver_path, l, status)) return status;
  qinv::VerifyConfig cfg;
  cfg.n = l.pq.n;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.prime = prime;
  cfg.mode = mode;
  const auto report = qinv::run_all(l.pq.quiver, l.pq.psi, cfg);
  if (format == "text")
    std::cout << qinv::report_to_plain_text(report);
  else
    std::cout << qinv::report_to_json_text(report);
  return report.pass ? kExitOk : kExitSemantic;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generator systems of unitriangular invariants on quiver representation spaces"};
  app.require_subcommand(1);

  std::string quiver_path, point_path;
  std::string mode_str = "extended";
  std::string format = "text";
  int trials = 100;
  uint64_t seed = 0;
  uint64_t prime = 2147483647ULL;

  auto* validate = app.add_subcommand("validate", "check a quiver file");
  validate->add_option("quiver", quiver_path)->required();

  auto* section = app.add_subcommand("section", "per-arrow section shapes and dimensions");
  section->add_option("quiver", quiver_path)->required();
  section->add_option("--mode", mode_str);
  section->add_option("--format", format);

  auto* generators = app.add_subcommand("generators", "list the generator system");
  generators->add_option("quiver", quiver_path)->required();
  generators->add_option("--mode", mode_str);
  std::string gen_format = "json";
  generators->add_option("--format", gen_format);

  auto* count = app.add_subcommand("count", "generator counts per arrow");
  count->add_option("quiver", quiver_path)->required();
  count->add_option("--mode", mode_str);
  count->add_option("--format", format);

  auto* eval = app.add_subcommand("eval", "evaluate all generators at a point");
  eval->add_option("quiver", quiver_path)->required();
  eval->add_option("--point", point_path)->required();
  eval->add_option("--mode", mode_str);

  auto* reduce = app.add_subcommand("reduce", "move a point into the section");
  reduce->add_option("quiver", quiver_path)->required();
  reduce->add_option("--point", point_path)->required();

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("quiver", quiver_path)->required();
  verify->add_option("--trials", trials);
  verify->add_option("--seed", seed);
  verify->add_option("--prime", prime);
  verify->add_option("--mode", mode_str);
  std::string verify_format = "json";
  verify->add_option("--format", verify_format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (validate->parsed()) return cmd_validate(quiver_path);
    if (section->parsed()) return cmd_section(quiver_path, format);
    if (generators->parsed()) return cmd_generators(quiver_path, parse_mode(mode_str), gen_format);
    if (count->parsed()) return cmd_count(quiver_path, parse_mode(mode_str), format);
    if (eval->parsed()) return cmd_eval(quiver_path, point_path, parse_mode(mode_str));
    if (reduce->parsed()) return cmd_reduce(quiver_path, point_path);
    if (verify->parsed())
      return cmd_verify(quiver_path, trials, seed, prime, parse_mode(mode_str), verify_format);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const qinv::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
