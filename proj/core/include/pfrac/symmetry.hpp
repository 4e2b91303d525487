#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pfrac/alpha_types.hpp"

namespace pfrac {

// One generator of Z_2 x S_N acting on periodic expansions: either the
// transposition sigma_k (1 <= k <= N-1) or the involution eps*pi.
struct Generator {
  enum class Kind { Sigma, EpsPi };
  Kind kind = Kind::EpsPi;
  int index = 0;  // k for Sigma, unused for EpsPi

  static Generator sigma(int k) { return {Kind::Sigma, k}; }
  static Generator eps_pi() { return {Kind::EpsPi, 0}; }

  // "sigma:<k>" or "epspi"
  static Generator parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const Generator&, const Generator&) = default;
};

using GroupWord = std::vector<Generator>;

// Swaps alpha_k and alpha_{k+1}; shifts b_{k-1} by +delta and the next
// coordinate by -delta, delta = (alpha_{k+1} - alpha_k) / b_k. Coordinates are
// (b_0, ..., b_{N-1}, b_N - b_0), so for k = N-1 the second update lands on
// b_N - b_0. Throws ZeroPivot when b_k = 0 and InvalidGenerator for k out of
// range.
Expansion apply_sigma(const Expansion& e, int k);

// b~_j = -b_{N-j} (1 <= j <= N-1), b~_0 = b_0 - b_N, b~_N = -b_N, alpha reversed.
Expansion apply_eps_pi(const Expansion& e);

Expansion apply_generator(const Expansion& e, const Generator& g);

// Applies the letters left to right. ZeroPivot details name the failing step.
Expansion apply_word(const Expansion& e, const GroupWord& word);

struct SkippedEdge {
  Expansion from;
  Generator generator;
  std::string reason;
};

struct OrbitResult {
  std::vector<Expansion> expansions;  // canonical order
  std::vector<SkippedEdge> skipped_edges;
  bool complete() const noexcept { return skipped_edges.empty(); }
};

// Breadth-first closure under sigma_1..sigma_{N-1} and eps*pi, or under
// sigma_1..sigma_{N-2} when pure is set (requires e.is_pure(), else NotPure).
OrbitResult orbit(const Expansion& e, bool pure);

}  // namespace pfrac
