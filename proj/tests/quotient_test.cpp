#include <gtest/gtest.h>

#include <random>

#include "frobcheck/ideal_algebra.hpp"
#include "frobcheck/quotient.hpp"
#include "test_support.hpp"

using namespace frobcheck;
using frobcheck::testing::I;
using frobcheck::testing::P;

namespace {

Ring r5() { return make_ring(5, {"x", "y", "z"}); }

AmbientRing cone() { return AmbientRing::hypersurface(P(r5(), "x*y - z^2")); }

QuotientIdeal Qxz() { return q_ideal(cone(), {P(r5(), "x"), P(r5(), "z")}); }

}  // namespace

TEST(AmbientRingTest, Validation) {
  EXPECT_THROW(AmbientRing::hypersurface(P(r5(), "0")), InvalidArgument);
  EXPECT_THROW(AmbientRing::hypersurface(P(r5(), "3")), InvalidArgument);
  EXPECT_EQ(cone().describe(), "F5[x,y,z]/(x*y + 4*z^2)");
  EXPECT_FALSE(AmbientRing::regular(r5()).is_hypersurface());
}

TEST(QIdeal, PreimageContainsEquation) {
  Ring r = r5();
  EXPECT_TRUE(ideal_equal(Qxz().preimage(), I(r, "x, z")));
  QuotientIdeal zero = q_zero(cone());
  EXPECT_TRUE(ideal_equal(zero.preimage(), I(r, "x*y - z^2")));
  EXPECT_TRUE(zero.is_zero());
  EXPECT_TRUE(q_unit(cone()).is_unit());
  EXPECT_FALSE(Qxz().is_zero());
}

TEST(QPower, Examples) {
  Ring r = r5();
  EXPECT_TRUE(ideal_equal(q_power(Qxz(), 2).preimage(), I(r, "x^2, x*z, z^2, x*y - z^2")));
  EXPECT_TRUE(q_equal(q_power(Qxz(), 1), Qxz()));
  EXPECT_TRUE(q_power(Qxz(), 0).is_unit());
}

TEST(QBracket, Examples) {
  Ring r = r5();
  EXPECT_TRUE(ideal_equal(q_bracket(Qxz(), 1).preimage(), I(r, "x^5, z^5, x*y - z^2")));
  EXPECT_TRUE(q_bracket(q_zero(cone()), 1).is_zero());
  QuotientIdeal s = q_ideal(cone(), {P(r, "x + z")});
  EXPECT_TRUE(ideal_equal(q_bracket(s, 1).preimage(), I(r, "x^5 + z^5, x*y - z^2")));
}

TEST(QColon, Examples) {
  Ring r = r5();
  QuotientIdeal Q = Qxz();
  EXPECT_TRUE(q_subset(Q, q_colon(q_power(Q, 2), Q)).holds);
  EXPECT_TRUE(q_colon(q_zero(cone()), q_unit(cone())).is_zero());
  QuotientIdeal A = q_ideal(cone(), {P(r, "x^2")});
  QuotientIdeal B = q_ideal(cone(), {P(r, "x")});
  QuotientIdeal C = q_colon(A, B);
  EXPECT_TRUE(C.contains(P(r, "x")));
  EXPECT_TRUE(brute_membership_oracle(P(r, "x") * P(r, "x"), A.preimage(), 0));
  EXPECT_TRUE(q_colon(Q, q_zero(cone())).is_unit());
}

TEST(QSubset, Examples) {
  Ring r = r5();
  EXPECT_TRUE(q_subset(Qxz(), Qxz()).holds);
  auto res = q_subset(q_unit(cone()), Qxz());
  EXPECT_FALSE(res.holds);
  EXPECT_EQ(*res.witness, P(r, "1"));
  // x*y = z^2 in R, so x lies in (Q^2 : y); the saturation is exactly (x).
  Ideal sym = saturate(q_power(Qxz(), 2).preimage(), P(r, "y")).ideal;
  EXPECT_TRUE(q_equal(q_ideal(cone(), {P(r, "x")}), q_from_preimage(cone(), sym)));
}

TEST(QOps, RingMismatch) {
  AmbientRing other = AmbientRing::hypersurface(P(r5(), "x*y - z^3"));
  EXPECT_THROW(q_sum(Qxz(), q_zero(other)), RingMismatch);
  EXPECT_THROW(q_subset(Qxz(), q_zero(AmbientRing::regular(r5()))), RingMismatch);
}

namespace {

QuotientIdeal random_q(const AmbientRing& R, std::mt19937_64& rng) {
  std::vector<Polynomial> gens;
  std::size_t k = 1 + rng() % 2;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(frobcheck::testing::random_poly(R.ring(), rng, 2, 2, true));
  return q_ideal(R, gens);
}

AmbientRing random_hypersurface(std::mt19937_64& rng) {
  static const std::uint64_t primes[] = {2, 3, 5};
  Ring r = make_ring(primes[rng() % 3], {"x", "y", "z"});
  static const char* eqs[] = {"x*y - z^2", "x*y - z^3", "x^2 + y^2 + z^2", "x*y*z"};
  Polynomial f = parse_poly(r, eqs[rng() % 4]);
  if (f.is_zero() || f.is_constant()) f = parse_poly(r, "x*y - z^2");
  return AmbientRing::hypersurface(f);
}

}  // namespace

TEST(QuotientProperties, EquationAbsorbed) {
  std::mt19937_64 rng(201);
  for (int trial = 0; trial < 100; ++trial) {
    AmbientRing R = random_hypersurface(rng);
    QuotientIdeal A = random_q(R, rng);
    QuotientIdeal B = random_q(R, rng);
    for (const auto& out : {q_sum(A, B), q_product(A, B), q_power(A, 2), q_bracket(A, 1), q_colon(A, B)})
      ASSERT_TRUE(out.contains(R.equation()));
  }
}

TEST(QuotientProperties, PowersMultiply) {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 100; ++trial) {
    AmbientRing R = random_hypersurface(rng);
    QuotientIdeal Q = random_q(R, rng);
    unsigned a = 1 + rng() % 2, b = 1 + rng() % 2;
    ASSERT_TRUE(q_subset(q_product(q_power(Q, a), q_power(Q, b)), q_power(Q, a + b)).holds);
  }
}

TEST(QuotientProperties, BracketInsideOrdinaryPower) {
  std::mt19937_64 rng(203);
  for (int trial = 0; trial < 60; ++trial) {
    AmbientRing R = random_hypersurface(rng);
    QuotientIdeal Q = random_q(R, rng);
    unsigned p = R.ring().characteristic();
    ASSERT_TRUE(q_subset(q_bracket(Q, 1), q_power(Q, p)).holds);
  }
}

// r is in (A : B) exactly when r B lies in A inside R.
TEST(QuotientProperties, ColonMatchesDefinition) {
  std::mt19937_64 rng(204);
  for (int trial = 0; trial < 100; ++trial) {
    AmbientRing R = random_hypersurface(rng);
    QuotientIdeal A = random_q(R, rng);
    QuotientIdeal B = random_q(R, rng);
    QuotientIdeal C = q_colon(A, B);
    for (int s = 0; s < 3; ++s) {
      Polynomial r = frobcheck::testing::random_poly(R.ring(), rng, 3, 3);
      bool by_definition = true;
      for (const auto& g : B.generators()) by_definition = by_definition && A.contains(r * g);
      ASSERT_EQ(C.contains(r), by_definition);
    }
  }
}
