#pragma once

#include <stdexcept>
#include <string>

namespace qinv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a matrix (or a representation point) fails the corner-minor
/// nonvanishing condition required for reduction into the section.
struct OmegaError : Error {
  std::string arrow;  // empty when raised for a bare matrix
  int k;

  OmegaError(std::string arrow_name, int level)
      : Error(arrow_name.empty()
                  ? "not in Omega: k=" + std::to_string(level)
                  : "not in Omega: arrow " + arrow_name + ", k=" + std::to_string(level)),
        arrow(std::move(arrow_name)),
        k(level) {}
};

/// Syntax-level failure in a quiver or point file; carries the line number.
struct ParseError : Error {
  int line;

  ParseError(int line_no, const std::string& message)
      : Error("line " + std::to_string(line_no) + ": " + message), line(line_no) {}
};

}  // namespace qinv
