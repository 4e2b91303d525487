#include "pfrac/alpha_types.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "pfrac/error.hpp"

namespace pfrac {

AlphaSequence::AlphaSequence(std::vector<Rational> alphas) : alphas_(std::move(alphas)) {
  if (alphas_.empty() || alphas_.size() % 2 == 0) {
    throw Error(ErrorCode::InvalidAlphaSequence,
                "period must be odd and positive, got " + std::to_string(alphas_.size()));
  }
  std::vector<Rational> sorted = alphas_;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw Error(ErrorCode::InvalidAlphaSequence, "repeated alpha " + dup->to_string());
  }
}

AlphaSequence AlphaSequence::swapped(int k) const {
  if (k < 1 || k >= size()) {
    throw Error(ErrorCode::InvalidGenerator, "swap index " + std::to_string(k) + " out of range");
  }
  std::vector<Rational> out = alphas_;
  std::swap(out[static_cast<std::size_t>(k - 1)], out[static_cast<std::size_t>(k)]);
  return AlphaSequence(std::move(out));
}

AlphaSequence AlphaSequence::reversed() const {
  return AlphaSequence(std::vector<Rational>(alphas_.rbegin(), alphas_.rend()));
}

Expansion::Expansion(Rational b0, std::vector<Rational> block, AlphaSequence alpha)
    : b0_(std::move(b0)), block_(std::move(block)), alpha_(std::move(alpha)) {
  if (static_cast<int>(block_.size()) != alpha_.size()) {
    throw Error(ErrorCode::InvalidExpansion,
                "block length " + std::to_string(block_.size()) + " does not match period " +
                    std::to_string(alpha_.size()));
  }
}

std::strong_ordering operator<=>(const Expansion& lhs, const Expansion& rhs) {
  if (auto c = lhs.alpha_ <=> rhs.alpha_; c != 0) return c;
  if (auto c = lhs.b0_ <=> rhs.b0_; c != 0) return c;
  return lhs.block_ <=> rhs.block_;
}

int check_triple_shape(const AlphaTriple& t) {
  if (!t.A.is_monic()) throw Error(ErrorCode::InvalidTriple, "A must be monic, got " + t.A.to_string());
  const int g = *t.A.degree();
  if (!t.C.is_anti_monic() || *t.C.degree() != g + 1) {
    throw Error(ErrorCode::InvalidTriple,
                "C must be anti-monic of degree " + std::to_string(g + 1) + ", got " + t.C.to_string());
  }
  if (t.B.degree() > g) {
    throw Error(ErrorCode::InvalidTriple,
                "B must have degree <= " + std::to_string(g) + ", got " + t.B.to_string());
  }
  return g;
}

}  // namespace pfrac
