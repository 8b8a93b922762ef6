#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "qinv/error.hpp"
#include "qinv/fp.hpp"
#include "qinv/minors.hpp"
#include "qinv/quiver.hpp"
#include "qinv/rational.hpp"
#include "qinv/rep.hpp"
#include "qinv/section.hpp"

namespace qinv {

/// Deterministic child-seed derivation (splitmix64 step).
inline uint64_t derive_seed(uint64_t master, uint64_t counter) {
  uint64_t z = master + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seeded generator with unbiased bounded draws.  mt19937_64 output is
/// fully specified by the standard, so sequences are portable.
struct Rng {
  std::mt19937_64 gen;

  explicit Rng(uint64_t seed) : gen(seed) {}

  uint64_t next() { return gen(); }

  uint64_t below(uint64_t m) {
    if (m == 0) throw Error("Rng::below(0)");
    const uint64_t limit = UINT64_MAX - UINT64_MAX % m;
    uint64_t r;
    do {
      r = gen();
    } while (r >= limit);
    return r % m;
  }

  long long int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }
};

/// Rational sampling draws small integers; keeps exact arithmetic cheap
/// while random identity tests stay overwhelming.
struct RationalField {
  using Scalar = Rational;

  Rational sample(Rng& rng) const { return Rational(rng.int_in(-10, 10)); }
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
};

struct PrimeField {
  uint64_t p = 2147483647ULL;

  using Scalar = Fp;

  Fp sample(Rng& rng) const { return Fp(rng.below(p), p); }
  Fp zero() const { return Fp(0, p); }
  Fp one() const { return Fp(1, p); }
};

template <class F>
SquareMatrix<typename F::Scalar> sample_matrix(const F& field, int n, Rng& rng) {
  SquareMatrix<typename F::Scalar> m(n, field.zero());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.at(i, j) = field.sample(rng);
  return m;
}

/// Unitriangular element per vertex: strictly upper entries uniform.
template <class F>
GroupElement<typename F::Scalar> sample_group(const F& field, const Quiver& q, int n,
                                              uint64_t seed) {
  Rng rng(seed);
  GroupElement<typename F::Scalar> g;
  g.mats.reserve(q.vertices.size());
  for (size_t v = 0; v < q.vertices.size(); ++v) {
    SquareMatrix<typename F::Scalar> m = identity_matrix(n, field.one());
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) m.at(i, j) = field.sample(rng);
    g.mats.push_back(std::move(m));
  }
  return g;
}

template <class F>
RepPoint<typename F::Scalar> sample_point(const F& field, const Quiver& q, int n,
                                          uint64_t seed) {
  Rng rng(seed);
  RepPoint<typename F::Scalar> h;
  h.mats.reserve(q.arrows.size());
  for (size_t a = 0; a < q.arrows.size(); ++a) h.mats.push_back(sample_matrix(field, n, rng));
  return h;
}

/// Rejection-samples each arrow matrix until all its corner minors are
/// nonzero (at most 100 draws per arrow).
template <class F>
RepPoint<typename F::Scalar> sample_omega_point(const F& field, const Quiver& q, int n,
                                                uint64_t seed, int* attempts_out = nullptr) {
  Rng rng(seed);
  RepPoint<typename F::Scalar> h;
  h.mats.reserve(q.arrows.size());
  int attempts = 0;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    bool placed = false;
    for (int t = 0; t < 100 && !placed; ++t) {
      ++attempts;
      auto m = sample_matrix(field, n, rng);
      bool ok = true;
      for (int k = 1; k <= n && ok; ++k) ok = !is_zero(corner_minor(m, k));
      if (ok) {
        h.mats.push_back(std::move(m));
        placed = true;
      }
    }
    if (!placed) throw Error("omega sampling failed for arrow '" + q.arrows[a].name + "'");
  }
  if (attempts_out) *attempts_out = attempts;
  return h;
}

/// Point of the section: free coordinates random, the rest zero.
template <class F>
RepPoint<typename F::Scalar> sample_section_point(const F& field, const Quiver& q,
                                                  const SectionSpec& spec, uint64_t seed) {
  Rng rng(seed);
  RepPoint<typename F::Scalar> h;
  h.mats.reserve(q.arrows.size());
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    SquareMatrix<typename F::Scalar> m(spec.n, field.zero());
    for (const IndexPair& c : free_coordinates(spec.shapes[a], spec.n))
      m.at(c.i, c.k) = field.sample(rng);
    h.mats.push_back(std::move(m));
  }
  return h;
}

/// Seeded random quiver with at most `max_vertices` vertices and
/// `max_arrows` arrows, every vertex incident to some arrow, and a uniform
/// psi choice.  Loops and parallel arrows occur naturally.
std::pair<Quiver, PsiChoice> sample_quiver(uint64_t seed, int max_vertices = 5,
                                           int max_arrows = 6);

}  // namespace qinv
