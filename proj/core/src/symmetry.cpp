#include "pfrac/symmetry.hpp"

#include <charconv>
#include <deque>
#include <set>
#include <utility>

#include "pfrac/error.hpp"

namespace pfrac {

Generator Generator::parse(std::string_view text) {
  if (text == "epspi") return eps_pi();
  constexpr std::string_view prefix = "sigma:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string_view digits = text.substr(prefix.size());
    int k = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty() && k >= 1) return sigma(k);
  }
  throw Error(ErrorCode::InvalidGenerator, "unknown generator '" + std::string(text) + "'");
}

std::string Generator::to_string() const {
  return kind == Kind::EpsPi ? "epspi" : "sigma:" + std::to_string(index);
}

Expansion apply_sigma(const Expansion& e, int k) {
  const int n = e.period();
  if (k < 1 || k > n - 1) {
    throw Error(ErrorCode::InvalidGenerator,
                "sigma:" + std::to_string(k) + " needs 1 <= k <= " + std::to_string(n - 1));
  }
  if (e.b(k).is_zero()) {
    throw Error(ErrorCode::ZeroPivot, "sigma:" + std::to_string(k) + " with b_" + std::to_string(k) + " = 0");
  }
  const Rational delta = (e.alpha()[k] - e.alpha()[k - 1]) / e.b(k);

  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = e.b(i);
  Rational tail = e.tail();

  c[static_cast<std::size_t>(k - 1)] += delta;
  if (k <= n - 2) {
    c[static_cast<std::size_t>(k + 1)] -= delta;
  } else {
    tail -= delta;
  }

  Rational b0 = c.front();
  std::vector<Rational> block(c.begin() + 1, c.end());
  block.push_back(tail + b0);
  return Expansion(std::move(b0), std::move(block), e.alpha().swapped(k));
}

Expansion apply_eps_pi(const Expansion& e) {
  const int n = e.period();
  const Rational& bn = e.b(n);
  std::vector<Rational> block;
  block.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n - 1; ++j) block.push_back(-e.b(n - j));
  block.push_back(-bn);
  return Expansion(e.b0() - bn, std::move(block), e.alpha().reversed());
}

Expansion apply_generator(const Expansion& e, const Generator& g) {
  return g.kind == Generator::Kind::EpsPi ? apply_eps_pi(e) : apply_sigma(e, g.index);
}

Expansion apply_word(const Expansion& e, const GroupWord& word) {
  Expansion cur = e;
  for (std::size_t step = 0; step < word.size(); ++step) {
    try {
      cur = apply_generator(cur, word[step]);
    } catch (const Error& err) {
      throw Error(err.code(), "step " + std::to_string(step) + ": " + err.detail());
    }
  }
  return cur;
}

OrbitResult orbit(const Expansion& e, bool pure) {
  const int n = e.period();
  if (pure && !e.is_pure()) {
    throw Error(ErrorCode::NotPure, "b_N = " + e.b(n).to_string() + " differs from b_0 = " + e.b0().to_string());
  }

  std::vector<Generator> gens;
  for (int k = 1; k <= (pure ? n - 2 : n - 1); ++k) gens.push_back(Generator::sigma(k));
  if (!pure) gens.push_back(Generator::eps_pi());

  OrbitResult result;
  std::set<Expansion> seen{e};
  std::deque<Expansion> frontier{e};
  while (!frontier.empty()) {
    Expansion cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      try {
        Expansion next = apply_generator(cur, g);
        if (seen.insert(next).second) frontier.push_back(std::move(next));
      } catch (const Error& err) {
        if (err.code() != ErrorCode::ZeroPivot) throw;
        result.skipped_edges.push_back({cur, g, err.detail()});
      }
    }
  }
  result.expansions.assign(seen.begin(), seen.end());
  return result;
}

}  // namespace pfrac
