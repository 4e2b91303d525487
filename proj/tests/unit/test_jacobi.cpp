#include <algorithm>

#include "doctest.h"
#include "generators.hpp"
#include "pfrac/error.hpp"
#include "pfrac/jacobi.hpp"

using namespace pfrac;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

const Polynomial kR{q(1, 4), q(31, 2), q(-31, 4), 1};
const JacobiTriple kJ{{-6, 1}, {q(-11, 2)}, {5, q(-7, 4), 1}, kR};
const AlphaTriple kWorked{{-6, 1}, {q(7, 2), q(-3, 2)}, {-2, 4, -1}};

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::InvalidRational;
}

}  // namespace

TEST_SUITE("jacobi triple") {
  TEST_CASE("validation") {
    CHECK(kJ.genus() == 1);
    CHECK(code_of([] { JacobiTriple({-6, 1}, {q(-11, 2)}, {5, q(-7, 4), 1}, kR + Polynomial(1)); }) ==
          ErrorCode::InvalidJacobiTriple);
    CHECK(code_of([] { JacobiTriple({-6, 2}, {}, {5, q(-7, 4), 1}, Polynomial{-30, q(21, 2), q(-31, 2), 2}); }) ==
          ErrorCode::InvalidJacobiTriple);
    // deg V must stay below g
    CHECK(code_of([] { JacobiTriple({0, 1}, {0, 1}, {0, 0, 1}, Polynomial{0, 0, 1, 1}); }) ==
          ErrorCode::InvalidJacobiTriple);
    // R of even degree
    CHECK(code_of([] { JacobiTriple({0, 1}, {1}, {0, 1}, Polynomial{1, 0, 1}); }) == ErrorCode::InvalidJacobiTriple);
  }
}

TEST_SUITE("divisors") {
  TEST_CASE("worked divisor") {
    CHECK(jacobi_from_divisor({{{6, q(-11, 2)}}}, kR) == kJ);
    CHECK(divisor_from_jacobi(kJ) == Divisor{{{6, q(-11, 2)}}});
  }

  TEST_CASE("Weierstrass point") {
    const Polynomial r{0, -1, 0, 1};
    const JacobiTriple j = jacobi_from_divisor({{{1, 0}}}, r);
    CHECK(j.V().is_zero());
    CHECK(j.W() == Polynomial{0, 1, 1});
  }

  TEST_CASE("errors") {
    const Polynomial r5{4, 0, 0, 0, 0, 1};
    CHECK(code_of([&] { jacobi_from_divisor({{{0, 2}, {0, -2}}}, r5); }) == ErrorCode::SpecialDivisor);
    CHECK(code_of([&] { jacobi_from_divisor({{{0, 2}, {0, 2}}}, r5); }) == ErrorCode::RepeatedAbscissa);
    CHECK(code_of([&] { jacobi_from_divisor({{{0, 3}, {1, 1}}}, r5); }) == ErrorCode::PointOffCurve);
    CHECK(code_of([&] { jacobi_from_divisor({{{0, 2}}}, r5); }) == ErrorCode::InvalidDivisor);
    const JacobiTriple irr({1, 0, 1}, {}, {0, 0, 0, 1}, Polynomial{0, 0, 0, 1, 0, 1});
    CHECK(code_of([&] { divisor_from_jacobi(irr); }) == ErrorCode::IrrationalSupport);
  }

  TEST_CASE("property: divisor round trip") {
    testing::Gen gen(41);
    for (int g : {1, 2, 3}) {
      for (int trial = 0; trial < 30; ++trial) {
        const JacobiTriple j = gen.jacobi(g);
        const Divisor d = divisor_from_jacobi(j);
        CHECK(d.points.size() == static_cast<std::size_t>(g));
        for (const auto& p : d.points) CHECK(p.mu * p.mu == j.R().eval(p.lambda));
        CHECK(jacobi_from_divisor(d, j.R()) == j);
      }
    }
  }
}

TEST_SUITE("alpha triple maps") {
  TEST_CASE("worked example") {
    CHECK(alpha_triple_from_jacobi(kJ, q(-3, 2)) == kWorked);
    const auto back = jacobi_from_alpha_triple(kWorked);
    CHECK(back.beta == q(-3, 2));
    CHECK(back.jacobi == kJ);
  }

  TEST_CASE("beta = 0") {
    const AlphaTriple t = alpha_triple_from_jacobi(kJ, 0);
    CHECK(t.A == kJ.U());
    CHECK(t.B == kJ.V());
    CHECK(t.C == -kJ.W());
  }

  TEST_CASE("B below degree g gives beta = 0") {
    const AlphaTriple t{{-6, 1}, {q(-11, 2)}, {-5, q(7, 4), -1}};
    const auto r = jacobi_from_alpha_triple(t);
    CHECK(r.beta == q(0));
    CHECK(r.jacobi.V() == t.B);
  }

  TEST_CASE("property: mutual inverses") {
    testing::Gen gen(42);
    for (int g : {1, 2, 3}) {
      for (int trial = 0; trial < 30; ++trial) {
        const JacobiTriple j = gen.jacobi(g);
        const Rational beta = gen.rational();
        const AlphaTriple t = alpha_triple_from_jacobi(j, beta);
        CHECK(t.discriminant() == j.R());
        const auto back = jacobi_from_alpha_triple(t);
        CHECK(back.jacobi == j);
        CHECK(back.beta == beta);
        CHECK(alpha_triple_from_jacobi(back.jacobi, back.beta) == t);
      }
    }
  }
}

TEST_SUITE("pure_beta_candidates") {
  TEST_CASE("worked example") {
    const auto betas = pure_beta_candidates(kJ, 4);
    REQUIRE(betas.size() == 2);
    CHECK(std::find(betas.begin(), betas.end(), q(-2)) != betas.end());
    CHECK(std::find(betas.begin(), betas.end(), q(-7, 2)) != betas.end());
    for (const auto& b : betas) CHECK(alpha_triple_from_jacobi(kJ, b).C.eval(4) == q(0));
  }

  TEST_CASE("U vanishes at alpha_N") {
    const auto betas = pure_beta_candidates(kJ, 6);
    REQUIRE(betas.size() == 1);
    CHECK(betas[0] == kJ.W().eval(6) / (Rational(2) * kJ.V().eval(6)));
    CHECK(betas[0] == q(-61, 22));
    CHECK(alpha_triple_from_jacobi(kJ, betas[0]).C.eval(6) == q(0));
  }

  TEST_CASE("errors") {
    const JacobiTriple j({0, 1}, {1}, {0, 0, 1}, Polynomial{1, 0, 0, 1});
    CHECK(code_of([&] { pure_beta_candidates(j, 1); }) == ErrorCode::IrrationalBeta);
    CHECK(code_of([&] { pure_beta_candidates(j, -1); }) == ErrorCode::RootOfR);
  }

  TEST_CASE("property: candidates make C vanish") {
    testing::Gen gen(43);
    for (int trial = 0; trial < 200; ++trial) {
      const JacobiTriple j = gen.jacobi(static_cast<int>(gen.integer(1, 3)));
      const Rational a = gen.rational();
      std::vector<Rational> betas;
      try {
        betas = pure_beta_candidates(j, a);
      } catch (const Error& e) {
        CHECK((e.code() == ErrorCode::IrrationalBeta || e.code() == ErrorCode::RootOfR));
        continue;
      }
      CHECK(betas.size() <= 2);
      for (const auto& b : betas) CHECK(alpha_triple_from_jacobi(j, b).C.eval(a) == q(0));
    }
  }
}
