#include "doctest.h"
#include "generators.hpp"
#include "pfrac/alphafrac.hpp"
#include "pfrac/error.hpp"
#include "pfrac/json_io.hpp"
#include "pfrac/symmetry.hpp"

using namespace pfrac;
using json_io::json;

namespace {
Rational q(long n, long d = 1) { return Rational(n, d); }
}  // namespace

TEST_CASE("rationals are strings in lowest terms") {
  CHECK(json_io::to_json(q(15, 6)) == json("5/2"));
  CHECK(json_io::to_json(q(-4, 2)) == json("-2"));
  CHECK(json_io::rational_from_json(json("15/6")) == q(5, 2));
  CHECK(json_io::rational_from_json(json(7)) == q(7));
  CHECK_THROWS_AS(json_io::rational_from_json(json("x")), json_io::SchemaError);
  CHECK_THROWS_AS(json_io::rational_from_json(json(1.5)), json_io::SchemaError);
  CHECK_THROWS_AS(json_io::rational_from_json(json::array()), json_io::SchemaError);
}

TEST_CASE("polynomials are ascending coefficient arrays") {
  CHECK(json_io::to_json(Polynomial{q(-7, 2), q(1, 2)}) == json::parse(R"(["-7/2","1/2"])"));
  CHECK(json_io::to_json(Polynomial()) == json::array());
  CHECK(json_io::polynomial_from_json(json::parse(R"(["1","0","0"])")) == Polynomial(1));
}

TEST_CASE("expansion layout") {
  const Expansion e(1, {-3, 1, 3}, AlphaSequence({1, 3, 4}));
  const json j = json_io::to_json(e);
  CHECK(j == json::parse(R"({"alpha":["1","3","4"],"b0":"1","block":["-3","1","3"]})"));
  CHECK(json_io::dump(j) == "{\n  \"alpha\": [\n    \"1\",\n    \"3\",\n    \"4\"\n  ],\n  \"b0\": \"1\",\n"
                            "  \"block\": [\n    \"-3\",\n    \"1\",\n    \"3\"\n  ]\n}\n");
}

TEST_CASE("missing fields") {
  CHECK_THROWS_AS(json_io::expansion_from_json(json::parse(R"({"b0":"1","block":["1"]})")), json_io::SchemaError);
  CHECK_THROWS_AS(json_io::triple_from_json(json::parse(R"({"A":["1"]})")), json_io::SchemaError);
  CHECK_THROWS_AS(json_io::word_from_json(json::parse(R"("sigma:1")")), json_io::SchemaError);
}

TEST_CASE("domain validation still applies after parsing") {
  CHECK_THROWS_AS(json_io::alpha_from_json(json::parse(R"(["1","1","2"])")), Error);
}

TEST_CASE("property: parse after serialize is the identity") {
  testing::Gen gen(51);
  for (int trial = 0; trial < 100; ++trial) {
    const Expansion e = gen.expansion(static_cast<int>(2 * gen.integer(0, 3) + 1));
    CHECK(json_io::expansion_from_json(json::parse(json_io::dump(json_io::to_json(e)))) == e);
    const auto t = expansion_to_triple(e).triple;
    CHECK(json_io::triple_from_json(json_io::to_json(t)) == t);
    const JacobiTriple j = gen.jacobi(static_cast<int>(gen.integer(1, 3)));
    CHECK(json_io::jacobi_from_json(json_io::to_json(j)) == j);
    const Divisor d = divisor_from_jacobi(j);
    CHECK(json_io::divisor_from_json(json_io::to_json(d, j.R())) == d);
  }
  const GroupWord w{Generator::sigma(2), Generator::eps_pi()};
  CHECK(json_io::word_from_json(json_io::to_json(w)) == w);
}
