#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qinv/assembly.hpp"
#include "qinv/quiver.hpp"
#include "qinv/rational.hpp"
#include "qinv/rep.hpp"
#include "qinv/verify.hpp"

namespace qinv {

using ordered_json = nlohmann::ordered_json;

struct ParsedQuiver {
  Quiver quiver;
  PsiChoice psi;
  int n = 0;
};

/// Line-oriented quiver description: directives `n`, `vertex`, `arrow`,
/// `psi`; `#` comments and blank lines ignored.  Throws ParseError on
/// syntax problems (duplicate names, bad arity, missing `n`, unresolvable
/// psi arrow); reference-level issues are left to validate().
ParsedQuiver parse_quiver_text(const std::string& text);

/// Point file: `matrix <arrow>` blocks followed by n rows of n exact
/// rationals.  Every arrow must appear exactly once.
RepPoint<Rational> parse_point_text(const std::string& text, const Quiver& quiver, int n);

std::string point_to_text(const Quiver& quiver, const RepPoint<Rational>& h);
std::string group_to_text(const Quiver& quiver, const GroupElement<Rational>& g);

ordered_json descriptor_to_json(const GeneratorDescriptor& d, const Quiver& quiver);
GeneratorDescriptor descriptor_from_json(const ordered_json& j, const Quiver& quiver);

std::string report_to_json_text(const VerificationReport& report);
std::string report_to_plain_text(const VerificationReport& report);

std::string read_file(const std::string& path);

}  // namespace qinv
