#include <gtest/gtest.h>

#include <random>

#include "frobcheck/parse.hpp"
#include "frobcheck/polynomial.hpp"
#include "test_support.hpp"

using namespace frobcheck;
using frobcheck::testing::P;

namespace {

Ring r5() { return make_ring(5, {"x", "y", "z"}); }

}  // namespace

TEST(MakeRing, ValidDescriptor) {
  Ring r = make_ring(5, {"x", "y", "z"}, OrderKind::GrevLex);
  EXPECT_EQ(r.characteristic(), 5u);
  EXPECT_EQ(r.num_vars(), 3u);
  EXPECT_EQ(r.index_of("z"), 2u);
  EXPECT_EQ(r.order().kind(), OrderKind::GrevLex);
}

TEST(MakeRing, RejectsCompositeModulus) {
  try {
    make_ring(4, {"x"}, OrderKind::Lex);
    FAIL() << "expected error";
  } catch (const InvalidArgument& e) {
    EXPECT_STREQ(e.what(), "modulus not prime");
  }
  EXPECT_THROW(make_ring(1, {"x"}), InvalidArgument);
  EXPECT_THROW(make_ring(2147483649ull, {"x"}), InvalidArgument);
  EXPECT_NO_THROW(make_ring(2147483647ull, {"x"}));
}

TEST(MakeRing, RejectsDuplicateVariables) {
  try {
    make_ring(7, {"x", "x"}, OrderKind::Lex);
    FAIL() << "expected error";
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("duplicate variable"), std::string::npos);
  }
}

TEST(MakeRing, BlockOrderMustPartition) {
  EXPECT_THROW(Ring(5, {"t", "x", "y"}, MonomialOrder::block({1, 1})), InvalidArgument);
  EXPECT_NO_THROW(Ring(5, {"t", "x", "y"}, MonomialOrder::block({1, 2})));
}

TEST(MonomialOrderTest, GrevlexAndLex) {
  Ring g = make_ring(5, {"x", "y", "z"});
  Ring l = make_ring(5, {"x", "y", "z"}, OrderKind::Lex);
  // grevlex: x*z^2 vs y^3: same degree, last variable z is smaller in y^3.
  Polynomial a = P(g, "x*z^2 + y^3");
  EXPECT_EQ(a.to_string(), "y^3 + x*z^2");
  Polynomial b = P(l, "x*z^2 + y^3");
  EXPECT_EQ(b.to_string(), "x*z^2 + y^3");
  // Block order: t block dominates.
  Ring blk(5, {"t", "x"}, MonomialOrder::block({1, 1}));
  EXPECT_EQ(P(blk, "x^9 + t").to_string(), "t + x^9");
}

TEST(ParsePoly, Example61DefiningEquation) {
  Polynomial f = P(r5(), "x*y - z^3");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f, P(r5(), "x*y + 4*z^3"));
  EXPECT_EQ(f.to_string(), "4*z^3 + x*y");
}

TEST(ParsePoly, FermatCubicHasThreeTerms) {
  Ring r7 = make_ring(7, {"x", "y", "z"});
  EXPECT_EQ(P(r7, "x^3+y^3+z^3").size(), 3u);
}

TEST(ParsePoly, UnknownVariable) {
  try {
    P(r5(), "x + w");
    FAIL() << "expected parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.message(), "unknown variable w");
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 5u);
  }
}

TEST(ParsePoly, SyntaxErrorsCarryLocation) {
  try {
    parse_poly(r5(), "x +\n  * y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(P(r5(), "x^"), ParseError);
  EXPECT_THROW(P(r5(), "(x + y"), ParseError);
  EXPECT_THROW(P(r5(), "x^99999999999"), ParseError);
  EXPECT_THROW(P(r5(), "x^4000000000 * x^4000000000"), ParseError);
}

TEST(ParsePoly, ParenthesesAndImplicitProducts) {
  Ring r = r5();
  EXPECT_EQ(P(r, "(x+y)*(x-y)"), P(r, "x^2 - y^2"));
  EXPECT_EQ(P(r, "2x"), P(r, "2*x"));
  EXPECT_EQ(P(r, "(x+y)^2"), P(r, "x^2 + 2*x*y + y^2"));
  EXPECT_EQ(P(r, "-x"), P(r, "4*x"));
  EXPECT_EQ(P(r, "12"), P(r, "2"));
  EXPECT_TRUE(P(r, "5*x").is_zero());
  EXPECT_EQ(P(r, "0").to_string(), "0");
}

TEST(ParsePolyList, WrappedAndBare) {
  Ring r = r5();
  auto a = parse_poly_list(r, "(x, y^2)");
  auto b = parse_poly_list(r, "x, y^2");
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a, b);
  auto c = parse_poly_list(r, "(x+y)*z");
  ASSERT_EQ(c.size(), 1u);
  EXPECT_TRUE(parse_poly_list(r, "()").empty());
}

TEST(ParseRing, Forms) {
  Ring a = parse_ring("F5[x,y,z]");
  EXPECT_EQ(a, make_ring(5, {"x", "y", "z"}));
  Ring b = parse_ring("F_7[a, b] lex");
  EXPECT_EQ(b.order().kind(), OrderKind::Lex);
  EXPECT_THROW(parse_ring("F6[x]"), ParseError);
  EXPECT_THROW(parse_ring("F5[x,x]"), ParseError);
  EXPECT_THROW(parse_ring("Q[x]"), ParseError);
}

TEST(PolyArith, Examples) {
  Ring r = r5();
  EXPECT_TRUE((P(r, "x") + P(r, "-x")).is_zero());
  Ring r2 = make_ring(5, {"x", "y"});
  EXPECT_EQ(P(r2, "x+y").pow(5), P(r2, "x^5 + y^5"));
  EXPECT_EQ(P(r, "x*y - z^2") * P(r, "x*y + z^2"), P(r, "x^2*y^2 - z^4"));
  EXPECT_EQ(P(r, "x+1").pow(0), P(r, "1"));
}

TEST(PolyArith, RingMismatch) {
  Ring a = make_ring(5, {"x", "y"});
  Ring b = make_ring(7, {"x", "y"});
  EXPECT_THROW(P(a, "x") + P(b, "x"), RingMismatch);
  EXPECT_THROW(P(a, "x") * P(b, "x"), RingMismatch);
}

TEST(FrobPow, Examples) {
  Ring r2 = make_ring(5, {"x", "y"});
  EXPECT_EQ(P(r2, "x+y").frobenius_power(1), P(r2, "x^5 + y^5"));
  EXPECT_EQ(P(r2, "2x").frobenius_power(1), P(r2, "2*x^5"));
  Ring r = r5();
  Polynomial f = P(r, "x*y - z^3");
  // Cross-check against repeated squaring.
  EXPECT_EQ(f.frobenius_power(1), f.pow(5));
  EXPECT_EQ(f.frobenius_power(1), P(r, "x^5*y^5 - z^15"));
  EXPECT_EQ(f.frobenius_power(2), f.pow(25));
}

TEST(FrobPow, OverflowDetected) {
  Ring r = make_ring(2147483647ull, {"x"});
  EXPECT_THROW(P(r, "x^3").frobenius_power(1), ExponentOverflow);
  EXPECT_THROW(P(r, "x").frobenius_power(2), ExponentOverflow);
}

TEST(PartialDerivative, Examples) {
  Ring r = r5();
  EXPECT_EQ(P(r, "x*y - z^3").derivative("x"), P(r, "y"));
  Ring r7 = make_ring(7, {"x", "y", "z"});
  EXPECT_EQ(P(r7, "x*y - z^3").derivative("z"), P(r7, "4*z^2"));
  EXPECT_TRUE(P(r, "x^5").derivative("x").is_zero());
  EXPECT_THROW(P(r, "x").derivative("w"), InvalidArgument);
}

TEST(DivideExact, QuotientAndFailure) {
  Ring r = r5();
  Polynomial g = P(r, "x*y - z^2");
  Polynomial q = P(r, "x + 3*z + 1");
  EXPECT_EQ(divide_exact(g * q, g), q);
  EXPECT_THROW(divide_exact(P(r, "x"), P(r, "y")), InternalError);
}

class RingAxioms : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20240611};
  Polynomial random(const Ring& r) { return frobcheck::testing::random_poly(r, rng, 20, 6); }
  Ring random_ring() {
    static const std::uint64_t primes[] = {2, 3, 5, 7, 101, 32003};
    std::size_t n = 1 + rng() % 5;
    return make_ring(primes[rng() % 6], frobcheck::testing::var_names(n),
                     rng() % 2 ? OrderKind::Lex : OrderKind::GrevLex);
  }
};

TEST_F(RingAxioms, RingLaws) {
  for (int trial = 0; trial < 200; ++trial) {
    Ring r = random_ring();
    Polynomial a = random(r), b = random(r), c = random(r);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_TRUE((a + (-a)).is_zero());
    ASSERT_EQ(a - b, a + (-b));
  }
}

TEST_F(RingAxioms, FormatParseRoundTrip) {
  for (int trial = 0; trial < 200; ++trial) {
    Ring r = random_ring();
    Polynomial a = random(r) * random(r);
    ASSERT_EQ(parse_poly(r, a.to_string()).terms(), a.terms()) << a;
  }
}

TEST_F(RingAxioms, FrobeniusIsRingMapAndMatchesPow) {
  for (int trial = 0; trial < 100; ++trial) {
    static const std::uint64_t primes[] = {2, 3, 5, 7};
    Ring r = make_ring(primes[rng() % 4], frobcheck::testing::var_names(1 + rng() % 3));
    Polynomial a = frobcheck::testing::random_poly(r, rng, 6, 3);
    Polynomial b = frobcheck::testing::random_poly(r, rng, 6, 3);
    unsigned e = 1 + static_cast<unsigned>(rng() % 2);
    ASSERT_EQ((a + b).frobenius_power(e), a.frobenius_power(e) + b.frobenius_power(e));
    ASSERT_EQ((a * b).frobenius_power(e), a.frobenius_power(e) * b.frobenius_power(e));
    ASSERT_EQ(a.frobenius_power(e), a.pow(frobenius_exponent(r.characteristic(), e)));
  }
}
