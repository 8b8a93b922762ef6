#pragma once

#include <string>

#include "qinv/error.hpp"
// Base-field customization points (zero_of, one_of, is_zero) must be
// visible before the templates below are defined.
#include "qinv/fp.hpp"
#include "qinv/rational.hpp"

namespace qinv {

/// First-order dual number a + b*eps with eps^2 = 0 over an exact base
/// field.  Arithmetic on the eps part is the product rule, so evaluating a
/// polynomial at x + eps yields the exact partial derivative in `b`.
template <class T>
struct Dual {
  T a;  // value
  T b;  // derivative part

  Dual(T value, T deriv) : a(std::move(value)), b(std::move(deriv)) {}

  static Dual constant(const T& v) { return Dual(v, zero_of(v)); }
  static Dual variable(const T& v) { return Dual(v, one_of(v)); }

  friend Dual operator+(const Dual& x, const Dual& y) {
    return Dual(x.a + y.a, x.b + y.b);
  }
  friend Dual operator-(const Dual& x, const Dual& y) {
    return Dual(x.a - y.a, x.b - y.b);
  }
  friend Dual operator*(const Dual& x, const Dual& y) {
    return Dual(x.a * y.a, x.a * y.b + x.b * y.a);
  }
  friend Dual operator/(const Dual& x, const Dual& y) {
    if (is_zero(y.a)) throw Error("dual division by a non-unit");
    const T q = x.a / y.a;
    return Dual(q, (x.b - q * y.b) / y.a);
  }
  Dual operator-() const { return Dual(-a, -b); }

  friend bool operator==(const Dual& x, const Dual& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const Dual& x, const Dual& y) { return !(x == y); }
};

template <class T>
Dual<T> zero_of(const Dual<T>& s) {
  return Dual<T>(zero_of(s.a), zero_of(s.a));
}
template <class T>
Dual<T> one_of(const Dual<T>& s) {
  return Dual<T>(one_of(s.a), zero_of(s.a));
}
template <class T>
bool is_zero(const Dual<T>& x) {
  return is_zero(x.a) && is_zero(x.b);
}
template <class T>
std::string scalar_str(const Dual<T>& x) {
  return scalar_str(x.a) + "+" + scalar_str(x.b) + "e";
}

}  // namespace qinv
