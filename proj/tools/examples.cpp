// Canned datasets for `pfrac example`: the genus-1 worked example with all
// twelve expansions, and small N = 1 / N = 3 periodic and pure cases.

#include <algorithm>

#include "cli.hpp"
#include "pfrac/alphafrac.hpp"
#include "pfrac/error.hpp"
#include "pfrac/json_io.hpp"

namespace pfrac::cli {
namespace {

using json_io::json;
using json_io::to_json;

AlphaSequence alphas(std::initializer_list<long> values) {
  return AlphaSequence(std::vector<Rational>(values.begin(), values.end()));
}

json dataset(const std::string& name, const AlphaTriple& t, const AlphaSequence& alpha, bool pure,
             std::vector<Expansion> expansions) {
  std::sort(expansions.begin(), expansions.end());
  json list = json::array();
  for (const auto& e : expansions) list.push_back(to_json(e));
  return {{"name", name},
          {"alpha", to_json(alpha)},
          {"triple", to_json(t)},
          {"R", to_json(t.discriminant())},
          {"S", to_json(admissible_decompose(t.discriminant(), alpha))},
          {"pure", pure},
          {"expansions", std::move(list)}};
}

json sect4() {
  // phi = (3x - 7 + sqrt(4x^3 - 31x^2 + 62x + 1)) / (2(x - 6))
  const AlphaTriple t{{-6, 1}, {Rational(7, 2), Rational(-3, 2)}, {-2, 4, -1}};
  std::vector<Rational> order{1, 3, 4};
  std::vector<Expansion> all;
  do {
    auto [plus, minus] = expand(t, AlphaSequence(order));
    all.push_back(std::move(plus));
    all.push_back(std::move(minus));
  } while (std::next_permutation(order.begin(), order.end()));
  return dataset("sect4", t, alphas({1, 3, 4}), false, std::move(all));
}

json n1_periodic() {
  // A = 1, B = 0, C = -(lambda + 3), alpha_1 = 1: b0 = +-2.
  const AlphaTriple t{{1}, {}, {-3, -1}};
  const AlphaSequence alpha = alphas({1});
  auto [plus, minus] = expand(t, alpha);
  return dataset("n1-periodic", t, alpha, false, {plus, minus});
}

json n1_pure() {
  // A = 1, B = beta = 1, C = -(lambda - alpha_1), alpha_1 = 0: b0 = b1 = -2 beta.
  const AlphaTriple t{{1}, {1}, {0, -1}};
  const AlphaSequence alpha = alphas({0});
  return dataset("n1-pure", t, alpha, true, {pure_expand(t, alpha)});
}

json pure_n3() {
  const AlphaTriple t{{0, 1}, {-1, Rational(-1, 2)}, {2, 1, -1}};
  const AlphaSequence alpha = alphas({0, 1, 2});
  return dataset("pure-n3", t, alpha, true, {pure_expand(t, alpha)});
}

}  // namespace

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"sect4", "n1-periodic", "n1-pure", "pure-n3"};
  return names;
}

json example(const std::string& name) {
  if (name == "sect4") return sect4();
  if (name == "n1-periodic") return n1_periodic();
  if (name == "n1-pure") return n1_pure();
  if (name == "pure-n3") return pure_n3();
  throw Error(ErrorCode::UnknownExample, "no example named '" + name + "'");
}

}  // namespace pfrac::cli
