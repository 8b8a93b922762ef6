#include "qinv/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace qinv {

namespace {

bool valid_ident(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Strips a trailing '#' comment and splits into tokens; empty for blanks.
std::vector<std::string> directive_tokens(std::string line) {
  const auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  return tokenize(line);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

ParsedQuiver parse_quiver_text(const std::string& text) {
  ParsedQuiver out;
  bool have_n = false;
  std::set<std::string> vnames, anames, psi_vertices;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = directive_tokens(line);
    if (tok.empty()) continue;
    const std::string& head = tok[0];
    if (head == "n") {
      if (tok.size() != 2) throw ParseError(lineno, "n takes one integer argument");
      if (have_n) throw ParseError(lineno, "duplicate n directive");
      try {
        out.n = std::stoi(tok[1]);
      } catch (...) {
        throw ParseError(lineno, "bad integer for n: '" + tok[1] + "'");
      }
      if (out.n < 1) throw ParseError(lineno, "n must be positive");
      have_n = true;
    } else if (head == "vertex") {
      if (tok.size() != 2) throw ParseError(lineno, "vertex takes one identifier");
      if (!valid_ident(tok[1])) throw ParseError(lineno, "bad identifier '" + tok[1] + "'");
      if (!vnames.insert(tok[1]).second)
        throw ParseError(lineno, "duplicate vertex '" + tok[1] + "'");
      out.quiver.vertices.push_back(tok[1]);
    } else if (head == "arrow") {
      if (tok.size() != 4) throw ParseError(lineno, "arrow takes name, source, target");
      for (int t = 1; t <= 3; ++t)
        if (!valid_ident(tok[t])) throw ParseError(lineno, "bad identifier '" + tok[t] + "'");
      if (!anames.insert(tok[1]).second)
        throw ParseError(lineno, "duplicate arrow '" + tok[1] + "'");
      out.quiver.arrows.push_back({tok[1], tok[2], tok[3]});
    } else if (head == "psi") {
      if (tok.size() != 3) throw ParseError(lineno, "psi takes vertex and arrow");
      for (int t = 1; t <= 2; ++t)
        if (!valid_ident(tok[t])) throw ParseError(lineno, "bad identifier '" + tok[t] + "'");
      if (!psi_vertices.insert(tok[1]).second)
        throw ParseError(lineno, "duplicate psi for vertex '" + tok[1] + "'");
      out.psi[tok[1]] = tok[2];
    } else {
      throw ParseError(lineno, "unknown directive '" + head + "'");
    }
  }
  if (!have_n) throw ParseError(lineno + 1, "missing n directive");
  // psi arrows must resolve; anything subtler is validate()'s business
  for (const auto& [v, a] : out.psi)
    if (out.quiver.arrow_index(a) < 0)
      throw ParseError(0, "psi references unknown arrow '" + a + "'");
  return out;
}

RepPoint<Rational> parse_point_text(const std::string& text, const Quiver& quiver, int n) {
  const size_t na = quiver.arrows.size();
  std::vector<bool> seen(na, false);
  RepPoint<Rational> h;
  h.mats.assign(na, SquareMatrix<Rational>(n, Rational(0)));

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int current = -1;  // arrow being filled
  int row = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = directive_tokens(line);
    if (tok.empty()) continue;
    if (tok[0] == "matrix") {
      if (current >= 0 && row < n)
        throw ParseError(lineno, "matrix block for '" + quiver.arrows[current].name +
                                     "' has only " + std::to_string(row) + " rows");
      if (tok.size() != 2) throw ParseError(lineno, "matrix takes one arrow identifier");
      current = quiver.arrow_index(tok[1]);
      if (current < 0) throw ParseError(lineno, "unknown arrow '" + tok[1] + "'");
      if (seen[current]) throw ParseError(lineno, "duplicate matrix for '" + tok[1] + "'");
      seen[current] = true;
      row = 0;
    } else {
      if (current < 0) throw ParseError(lineno, "matrix row outside any block");
      if (row >= n) throw ParseError(lineno, "too many rows in matrix block");
      if (static_cast<int>(tok.size()) != n)
        throw ParseError(lineno, "expected " + std::to_string(n) + " entries, got " +
                                     std::to_string(tok.size()));
      ++row;
      for (int j = 1; j <= n; ++j) {
        try {
          h.mats[current].at(row, j) = parse_rational(tok[j - 1]);
        } catch (const Error& e) {
          throw ParseError(lineno, e.what());
        }
      }
    }
  }
  if (current >= 0 && row < n)
    throw ParseError(lineno, "matrix block for '" + quiver.arrows[current].name +
                                 "' has only " + std::to_string(row) + " rows");
  for (size_t a = 0; a < na; ++a)
    if (!seen[a]) throw ParseError(0, "missing matrix for arrow '" + quiver.arrows[a].name + "'");
  return h;
}

namespace {

std::string matrix_block(const std::string& name, const SquareMatrix<Rational>& m) {
  std::string out = "matrix " + name + "\n";
  for (int i = 1; i <= m.size(); ++i) {
    for (int j = 1; j <= m.size(); ++j) {
      if (j > 1) out += ' ';
      out += scalar_str(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string point_to_text(const Quiver& quiver, const RepPoint<Rational>& h) {
  std::string out;
  for (size_t a = 0; a < quiver.arrows.size(); ++a)
    out += matrix_block(quiver.arrows[a].name, h.mats[a]);
  return out;
}

std::string group_to_text(const Quiver& quiver, const GroupElement<Rational>& g) {
  std::string out;
  for (size_t v = 0; v < quiver.vertices.size(); ++v)
    out += matrix_block(quiver.vertices[v], g.mats[v]);
  return out;
}

ordered_json descriptor_to_json(const GeneratorDescriptor& d, const Quiver& quiver) {
  ordered_json j;
  j["id"] = d.id;
  j["kind"] = kind_name(d.kind);
  ordered_json arrows = ordered_json::array();
  arrows.push_back(quiver.arrows[static_cast<size_t>(d.arrow_a)].name);
  if (d.kind != GenKind::D)
    arrows.push_back(quiver.arrows[static_cast<size_t>(d.arrow_b)].name);
  j["arrows"] = arrows;
  if (d.kind != GenKind::D) j["i"] = d.i;
  j["k"] = d.k;
  j["leading"] = {{"arrow", quiver.arrows[static_cast<size_t>(d.lead_arrow)].name},
                  {"row", d.lead_row},
                  {"col", d.lead_col}};
  j["side"] = side_name(d.side);
  return j;
}

GeneratorDescriptor descriptor_from_json(const ordered_json& j, const Quiver& quiver) {
  GeneratorDescriptor d;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "D")
    d.kind = GenKind::D;
  else if (kind == "P")
    d.kind = GenKind::P;
  else if (kind == "R-")
    d.kind = GenKind::Rminus;
  else if (kind == "R+")
    d.kind = GenKind::Rplus;
  else
    throw Error("unknown descriptor kind '" + kind + "'");
  const std::string side = j.at("side").get<std::string>();
  if (side == "diagonal")
    d.side = Side::Diagonal;
  else if (side == "source")
    d.side = Side::Source;
  else if (side == "target")
    d.side = Side::Target;
  else
    throw Error("unknown descriptor side '" + side + "'");
  const auto& arrows = j.at("arrows");
  d.arrow_a = quiver.arrow_index(arrows.at(0).get<std::string>());
  if (d.arrow_a < 0) throw Error("descriptor references unknown arrow");
  if (d.kind != GenKind::D) {
    d.arrow_b = quiver.arrow_index(arrows.at(1).get<std::string>());
    if (d.arrow_b < 0) throw Error("descriptor references unknown arrow");
    d.i = j.at("i").get<int>();
  }
  d.k = j.at("k").get<int>();
  const auto& lead = j.at("leading");
  d.lead_arrow = quiver.arrow_index(lead.at("arrow").get<std::string>());
  if (d.lead_arrow < 0) throw Error("descriptor leading references unknown arrow");
  d.lead_row = lead.at("row").get<int>();
  d.lead_col = lead.at("col").get<int>();
  d.id = j.at("id").get<std::string>();
  return d;
}

std::string report_to_json_text(const VerificationReport& report) {
  ordered_json j;
  j["config"] = {{"n", report.config.n},
                 {"prime", report.config.prime},
                 {"seed", report.config.seed},
                 {"trials", report.config.trials},
                 {"mode", mode_name(report.config.mode)}};
  ordered_json checks = ordered_json::array();
  for (const auto& rec : report.checks) {
    ordered_json c;
    c["name"] = rec.name;
    c["trials"] = rec.trials;
    c["passes"] = rec.passes;
    if (rec.counterexample_seed) c["counterexample_seed"] = *rec.counterexample_seed;
    c["failure_bound"] = rec.failure_bound;
    checks.push_back(std::move(c));
  }
  j["checks"] = checks;
  j["verdict"] = report.pass ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::string report_to_plain_text(const VerificationReport& report) {
  std::string out;
  for (const auto& rec : report.checks) {
    out += rec.name + ": " + std::to_string(rec.passes) + "/" + std::to_string(rec.trials) +
           (rec.passed() ? " pass" : " FAIL");
    if (rec.counterexample_seed)
      out += " (counterexample seed " + std::to_string(*rec.counterexample_seed) + ")";
    out += "\n";
  }
  out += std::string("verdict: ") + (report.pass ? "pass" : "fail") + "\n";
  return out;
}

}  // namespace qinv
