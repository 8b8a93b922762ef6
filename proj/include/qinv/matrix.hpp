#pragma once

#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qinv/dual.hpp"
#include "qinv/error.hpp"
#include "qinv/fp.hpp"
#include "qinv/order.hpp"
#include "qinv/rational.hpp"

namespace qinv {

template <class S>
struct is_dual : std::false_type {};
template <class T>
struct is_dual<Dual<T>> : std::true_type {};

/// Dense n x n matrix over an exact scalar type, indexed (row, col) from 1.
template <class S>
class SquareMatrix {
 public:
  SquareMatrix(int n, const S& fill) : n_(n), e_(check_size(n), fill) {}

  int size() const { return n_; }

  const S& at(int i, int j) const { return e_[index(i, j)]; }
  S& at(int i, int j) { return e_[index(i, j)]; }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n_ != b.n_) return false;
    for (size_t t = 0; t < a.e_.size(); ++t)
      if (!(a.e_[t] == b.e_[t])) return false;
    return true;
  }
  friend bool operator!=(const SquareMatrix& a, const SquareMatrix& b) {
    return !(a == b);
  }

 private:
  static size_t check_size(int n) {
    if (n < 1) throw Error("matrix size must be positive");
    return static_cast<size_t>(n) * static_cast<size_t>(n);
  }
  size_t index(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw Error("matrix index out of range");
    return static_cast<size_t>(i - 1) * n_ + static_cast<size_t>(j - 1);
  }

  int n_;
  std::vector<S> e_;
};

template <class S>
SquareMatrix<S> identity_matrix(int n, const S& one) {
  SquareMatrix<S> m(n, zero_of(one));
  for (int i = 1; i <= n; ++i) m.at(i, i) = one;
  return m;
}

/// Ones on the anti-diagonal (positions (i, i')), zeros elsewhere.
template <class S>
SquareMatrix<S> anti_identity(int n, const S& one) {
  SquareMatrix<S> m(n, zero_of(one));
  for (int i = 1; i <= n; ++i) m.at(i, mirror(i, n)) = one;
  return m;
}

template <class S>
SquareMatrix<S> operator*(const SquareMatrix<S>& a, const SquareMatrix<S>& b) {
  const int n = a.size();
  if (n != b.size()) throw Error("matrix product: size mismatch");
  SquareMatrix<S> c(n, zero_of(a.at(1, 1)));
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) {
      if (is_zero(a.at(i, k))) continue;
      for (int j = 1; j <= n; ++j)
        c.at(i, j) = c.at(i, j) + a.at(i, k) * b.at(k, j);
    }
  return c;
}

/// Exact determinant by pivoted Gaussian elimination over a field.
template <class S>
S det(const SquareMatrix<S>& input) {
  static_assert(!is_dual<S>::value, "handled by the Dual overload");
  SquareMatrix<S> m = input;
  const int n = m.size();
  const S one = one_of(m.at(1, 1));
  S result = one;
  bool negate = false;
  for (int c = 1; c <= n; ++c) {
    int pivot = 0;
    for (int r = c; r <= n; ++r)
      if (!is_zero(m.at(r, c))) {
        pivot = r;
        break;
      }
    if (pivot == 0) return zero_of(one);
    if (pivot != c) {
      for (int j = c; j <= n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      negate = !negate;
    }
    const S pv = m.at(c, c);
    result = result * pv;
    for (int r = c + 1; r <= n; ++r) {
      if (is_zero(m.at(r, c))) continue;
      const S f = m.at(r, c) / pv;
      for (int j = c; j <= n; ++j) m.at(r, j) = m.at(r, j) - f * m.at(c, j);
    }
  }
  return negate ? -result : result;
}

/// Determinant over dual numbers.  Duals have zero divisors, so elimination
/// with division is not available; instead expand by multilinearity:
/// det(A + eps B) = det(A) + eps * sum_j det(A with column j from B).
/// Columns whose eps parts all vanish contribute nothing and are skipped.
template <class T>
Dual<T> det(const SquareMatrix<Dual<T>>& m) {
  const int n = m.size();
  const T zero = zero_of(m.at(1, 1).a);
  SquareMatrix<T> base(n, zero);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) base.at(i, j) = m.at(i, j).a;
  const T d = det(base);
  T dd = zero;
  for (int j = 1; j <= n; ++j) {
    bool live = false;
    for (int i = 1; i <= n; ++i)
      if (!is_zero(m.at(i, j).b)) {
        live = true;
        break;
      }
    if (!live) continue;
    SquareMatrix<T> col = base;
    for (int i = 1; i <= n; ++i) col.at(i, j) = m.at(i, j).b;
    dd = dd + det(col);
  }
  return Dual<T>(d, dd);
}

template <class S>
bool is_unitriangular(const SquareMatrix<S>& m) {
  const int n = m.size();
  const S one = one_of(m.at(1, 1));
  for (int i = 1; i <= n; ++i) {
    if (!(m.at(i, i) == one)) return false;
    for (int j = 1; j < i; ++j)
      if (!is_zero(m.at(i, j))) return false;
  }
  return true;
}

/// Inverse of an upper unitriangular matrix by back-substitution.
template <class S>
SquareMatrix<S> inverse_unitriangular(const SquareMatrix<S>& u) {
  const int n = u.size();
  if (!is_unitriangular(u)) throw Error("inverse_unitriangular: not unitriangular");
  SquareMatrix<S> v = identity_matrix(n, one_of(u.at(1, 1)));
  for (int j = 1; j <= n; ++j)
    for (int i = j - 1; i >= 1; --i) {
      S acc = zero_of(u.at(1, 1));
      for (int t = i + 1; t <= j; ++t) acc = acc + u.at(i, t) * v.at(t, j);
      v.at(i, j) = -acc;
    }
  return v;
}

/// General exact inverse (Gauss-Jordan).  Throws on singular input.
template <class S>
SquareMatrix<S> inverse(const SquareMatrix<S>& input) {
  SquareMatrix<S> m = input;
  const int n = m.size();
  SquareMatrix<S> v = identity_matrix(n, one_of(m.at(1, 1)));
  for (int c = 1; c <= n; ++c) {
    int pivot = 0;
    for (int r = c; r <= n; ++r)
      if (!is_zero(m.at(r, c))) {
        pivot = r;
        break;
      }
    if (pivot == 0) throw Error("inverse: singular matrix");
    if (pivot != c)
      for (int j = 1; j <= n; ++j) {
        std::swap(m.at(pivot, j), m.at(c, j));
        std::swap(v.at(pivot, j), v.at(c, j));
      }
    const S pv = m.at(c, c);
    for (int j = 1; j <= n; ++j) {
      m.at(c, j) = m.at(c, j) / pv;
      v.at(c, j) = v.at(c, j) / pv;
    }
    for (int r = 1; r <= n; ++r) {
      if (r == c || is_zero(m.at(r, c))) continue;
      const S f = m.at(r, c);
      for (int j = 1; j <= n; ++j) {
        m.at(r, j) = m.at(r, j) - f * m.at(c, j);
        v.at(r, j) = v.at(r, j) - f * v.at(c, j);
      }
    }
  }
  return v;
}

template <class S>
std::string to_string(const SquareMatrix<S>& m) {
  std::string out;
  for (int i = 1; i <= m.size(); ++i) {
    for (int j = 1; j <= m.size(); ++j) {
      if (j > 1) out += ' ';
      out += scalar_str(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace qinv
