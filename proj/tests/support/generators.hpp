#pragma once

// Seeded random generators for property tests and the acceptance corpus.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "pfrac/alpha_types.hpp"
#include "pfrac/jacobi.hpp"

namespace pfrac::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  // Uniform-ish rational in [lo, hi] with denominator <= max_den.
  Rational rational(long lo = -10, long hi = 10, long max_den = 6) {
    const long den = integer(1, max_den);
    return Rational(integer(lo * den, hi * den), den);
  }

  Rational nonzero_rational(long lo = -10, long hi = 10, long max_den = 6) {
    for (;;) {
      Rational r = rational(lo, hi, max_den);
      if (!r.is_zero()) return r;
    }
  }

  // Distinct small integers.
  std::vector<Rational> distinct_integers(int count, long lo = -20, long hi = 20) {
    std::vector<long> pool;
    for (long v = lo; v <= hi; ++v) pool.push_back(v);
    std::shuffle(pool.begin(), pool.end(), rng_);
    return std::vector<Rational>(pool.begin(), pool.begin() + count);
  }

  AlphaSequence alpha(int n) { return AlphaSequence(distinct_integers(n)); }

  // Expansion with non-zero block entries in [-10, 10].
  Expansion expansion(int n) {
    std::vector<Rational> block;
    for (int i = 0; i < n; ++i) block.push_back(nonzero_rational());
    return Expansion(rational(), std::move(block), alpha(n));
  }

  // Pure expansion: b_N = b_0 (both non-zero).
  Expansion pure_expansion(int n) {
    Rational b0 = nonzero_rational();
    std::vector<Rational> block;
    for (int i = 0; i + 1 < n; ++i) block.push_back(nonzero_rational());
    block.push_back(b0);
    return Expansion(b0, std::move(block), alpha(n));
  }

  Polynomial polynomial(int degree) {
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i) c.push_back(rational());
    return Polynomial(std::move(c));
  }

  Polynomial monic(int degree) {
    std::vector<Rational> c;
    for (int i = 0; i < degree; ++i) c.push_back(rational());
    c.emplace_back(1);
    return Polynomial(std::move(c));
  }

  // Jacobi triple of genus g whose U splits into distinct rational roots.
  JacobiTriple jacobi(int g) {
    std::vector<Rational> roots = distinct_integers(g, -15, 15);
    for (auto& r : roots) r = r / Rational(integer(1, 3));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    while (static_cast<int>(roots.size()) < g) {
      roots = distinct_integers(g, -15, 15);
    }
    Polynomial U = Polynomial::from_roots(roots);
    Polynomial V = g == 0 ? Polynomial() : polynomial(g - 1);
    Polynomial W = monic(g + 1);
    Polynomial R = V * V + U * W;
    return JacobiTriple(std::move(U), std::move(V), std::move(W), std::move(R));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace pfrac::testing
