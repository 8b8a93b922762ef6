#pragma once

#include <cstdint>
#include <string>

#include "qinv/error.hpp"

namespace qinv {

/// Residue modulo a prime p, stored in [0, p).  Each value carries its
/// modulus; mixing moduli in one expression throws.
class Fp {
 public:
  Fp(uint64_t value, uint64_t modulus) : p_(modulus) {
    if (modulus < 2) throw Error("Fp: modulus must be at least 2");
    v_ = value % modulus;
  }

  static Fp from_int(long long x, uint64_t p) {
    long long r = x % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return Fp(static_cast<uint64_t>(r), p);
  }

  uint64_t value() const { return v_; }
  uint64_t modulus() const { return p_; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    a.check(b);
    uint64_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return Fp(s, a.p_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    a.check(b);
    return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    a.check(b);
    const auto prod = static_cast<unsigned __int128>(a.v_) * b.v_;
    return Fp(static_cast<uint64_t>(prod % a.p_), a.p_);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }

  friend bool operator==(const Fp& a, const Fp& b) {
    a.check(b);
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  /// Multiplicative inverse by the extended Euclidean algorithm.
  Fp inverse() const {
    if (v_ == 0) throw Error("Fp: division by zero");
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p_), new_r = static_cast<long long>(v_);
    while (new_r != 0) {
      const long long q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    if (r != 1) throw Error("Fp: element not invertible (modulus not prime?)");
    if (t < 0) t += static_cast<long long>(p_);
    return Fp(static_cast<uint64_t>(t), p_);
  }

 private:
  void check(const Fp& other) const {
    if (p_ != other.p_) throw Error("Fp: mixed moduli");
  }

  uint64_t v_;
  uint64_t p_;
};

inline Fp zero_of(const Fp& s) { return Fp(0, s.modulus()); }
inline Fp one_of(const Fp& s) { return Fp(1, s.modulus()); }
inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline std::string scalar_str(const Fp& x) { return std::to_string(x.value()); }

}  // namespace qinv
