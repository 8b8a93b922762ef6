#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "qinv/error.hpp"

namespace qinv {

// Arbitrary-precision exact rationals, kept canonical (lowest terms,
// positive denominator) by the gmp backend.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Rational zero_of(const Rational&) { return Rational(0); }
inline Rational one_of(const Rational&) { return Rational(1); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

/// Canonical text form: "p/q" in lowest terms, plain "p" for integers.
inline std::string scalar_str(const Rational& x) { return x.str(); }

/// Parses an integer or "num/den" token.  Throws Error on malformed input
/// or a zero denominator.
inline Rational parse_rational(const std::string& text) {
  auto is_int_token = [](const std::string& s) {
    if (s.empty()) return false;
    size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size()) return false;
    for (size_t j = start; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int_token(text)) throw Error("bad rational: '" + text + "'");
    return Rational(Integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_int_token(num) || !is_int_token(den))
    throw Error("bad rational: '" + text + "'");
  Integer d(den);
  if (d == 0) throw Error("zero denominator: '" + text + "'");
  return Rational(Integer(num)) / Rational(d);
}

}  // namespace qinv
