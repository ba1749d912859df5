#include <gtest/gtest.h>

#include <random>

#include "frobcheck/ideal_algebra.hpp"
#include "test_support.hpp"

using namespace frobcheck;
using frobcheck::testing::I;
using frobcheck::testing::P;

namespace {

Ring r5() { return make_ring(5, {"x", "y", "z"}); }

}  // namespace

TEST(IdealOps, SumProductPower) {
  Ring r = r5();
  EXPECT_TRUE(ideal_equal(ideal_sum(I(r, "x"), I(r, "y")), I(r, "x, y")));
  EXPECT_TRUE(ideal_equal(ideal_product(I(r, "x, y"), I(r, "z")), I(r, "x*z, y*z")));
  Ideal cube = ideal_power(I(r, "x, y"), 3);
  EXPECT_EQ(cube.generators().size(), 4u);
  EXPECT_TRUE(ideal_equal(cube, I(r, "x^3, x^2*y, x*y^2, y^3")));
  EXPECT_TRUE(ideal_power(I(r, "x"), 0).is_unit());
  // Duplicates from different orderings collapse.
  EXPECT_EQ(ideal_power(I(r, "x*y, x*z, y*z"), 2).generators().size(), 6u);
}

TEST(IdealOps, BracketPower) {
  Ring r = make_ring(5, {"x", "y"});
  EXPECT_EQ(bracket_power(I(r, "x + y"), 1).generators()[0], P(r, "x^5 + y^5"));
  EXPECT_TRUE(ideal_equal(bracket_power(I(r, "x, y"), 2), I(r, "x^25, y^25")));
}

TEST(Intersect, Examples) {
  Ring r = r5();
  EXPECT_TRUE(ideal_equal(ideal_intersect(I(r, "x"), I(r, "y")), I(r, "x*y")));
  EXPECT_TRUE(ideal_equal(ideal_intersect(I(r, "x + y"), I(r, "x - y")), I(r, "x^2 - y^2")));
  EXPECT_TRUE(ideal_equal(ideal_intersect(I(r, "x, y"), I(r, "y, z")), I(r, "y, x*z")));
  EXPECT_TRUE(ideal_intersect(I(r, "x"), Ideal::zero(r)).is_zero());
  EXPECT_TRUE(ideal_equal(ideal_intersect(I(r, "x + z"), Ideal::unit(r)), I(r, "x + z")));
}

TEST(Colon, Examples) {
  Ring r = r5();
  EXPECT_TRUE(ideal_equal(ideal_colon(I(r, "x^2, x*y"), P(r, "x")), I(r, "x, y")));
  EXPECT_TRUE(ideal_equal(ideal_colon(I(r, "x*y - z^2, x^2"), P(r, "x")),
                          ideal_colon(I(r, "x*y - z^2, x^2"), I(r, "x"))));
  EXPECT_TRUE(ideal_colon(I(r, "x"), P(r, "x")).is_unit());
  EXPECT_TRUE(ideal_equal(ideal_colon(I(r, "x*y + y*z"), P(r, "x + z")), I(r, "y")));
  EXPECT_TRUE(ideal_equal(ideal_colon(I(r, "x^2, y^2"), I(r, "x, y")), I(r, "x^2, y^2, x*y")));
  EXPECT_THROW(ideal_colon(I(r, "x"), P(r, "0")), InvalidArgument);
  EXPECT_THROW(ideal_colon(I(r, "x"), Ideal::zero(r)), InvalidArgument);
}

TEST(Saturate, Examples) {
  Ring r = r5();
  auto s = saturate(I(r, "x*y, x*z"), P(r, "y"));
  EXPECT_TRUE(ideal_equal(s.ideal, I(r, "x")));
  EXPECT_EQ(s.exponent, 1u);
  auto u = saturate(I(r, "x^2"), P(r, "x"));
  EXPECT_TRUE(u.ideal.is_unit());
  EXPECT_EQ(u.exponent, 2u);
  auto same = saturate(I(r, "x"), P(r, "y"));
  EXPECT_EQ(same.exponent, 0u);
  auto by_ideal = saturate(I(r, "x^2*y, x*y^2"), I(r, "x, y"));
  EXPECT_TRUE(ideal_equal(by_ideal.ideal, I(r, "x*y")));
  EXPECT_EQ(by_ideal.exponent, 1u);
}

TEST(Eliminate, ParametrizedParabola) {
  Ring r = make_ring(7, {"t", "x", "y"});
  Ideal E = eliminate(I(r, "x - t, y - t^2"), {"t"});
  EXPECT_TRUE(ideal_equal(E, I(r, "y - x^2")));
  EXPECT_THROW(eliminate(I(r, "x"), {"t", "x", "y"}), InvalidArgument);
  EXPECT_THROW(eliminate(I(r, "x"), {"w"}), InvalidArgument);
}

TEST(KrullDimension, Examples) {
  Ring r = r5();
  EXPECT_EQ(krull_dimension(I(r, "x*y - z^2")), 2);
  EXPECT_EQ(krull_dimension(I(r, "x, y")), 1);
  EXPECT_EQ(krull_dimension(I(r, "x*y, x*z, y*z")), 1);
  EXPECT_EQ(krull_dimension(Ideal::zero(r)), 3);
  EXPECT_EQ(krull_dimension(Ideal::unit(r)), -1);
}

TEST(Minors, TwoByTwoOfTwoByThree) {
  Ring r = r5();
  PolyMatrix M(r, {{P(r, "x"), P(r, "y"), P(r, "z")}, {P(r, "y"), P(r, "z"), P(r, "x")}});
  Ideal m = minors(M, 2);
  EXPECT_EQ(m.generators().size(), 3u);
  EXPECT_TRUE(ideal_equal(m, I(r, "x*z - y^2, x^2 - y*z, x*y - z^2")));
  PolyMatrix Z(r, 2, 3);
  EXPECT_TRUE(minors(Z, 2).is_zero());
  EXPECT_THROW(minors(M, 3), InvalidArgument);
}

TEST(Minors, ThreeByThreeDeterminant) {
  Ring r = make_ring(101, {"a", "b", "c", "d", "e", "f", "g", "h", "i"});
  PolyMatrix M(r, {{P(r, "a"), P(r, "b"), P(r, "c")},
                   {P(r, "d"), P(r, "e"), P(r, "f")},
                   {P(r, "g"), P(r, "h"), P(r, "i")}});
  Ideal det = minors(M, 3);
  ASSERT_EQ(det.generators().size(), 1u);
  EXPECT_EQ(det.generators()[0], P(r, "a*e*i - a*f*h - b*d*i + b*f*g + c*d*h - c*e*g"));
}

TEST(Jacobian, Entries) {
  Ring r = r5();
  PolyMatrix J = jacobian_matrix({P(r, "x*y - z^2")});
  EXPECT_EQ(J.at(0, 0), P(r, "y"));
  EXPECT_EQ(J.at(0, 2), P(r, "-2*z"));
}

TEST(MembershipOracle, Examples) {
  Ring r = r5();
  EXPECT_TRUE(brute_membership_oracle(P(r, "x*y"), I(r, "x"), 1));
  EXPECT_FALSE(brute_membership_oracle(P(r, "x*y"), I(r, "x"), 0));
  EXPECT_FALSE(brute_membership_oracle(P(r, "x"), I(r, "x^2"), 4));
  EXPECT_TRUE(brute_membership_oracle(P(r, "x*z"), I(r, "x^2, x*z, z^2, x*y - z^2"), 0));
  OracleOptions tiny;
  tiny.max_entries = 10;
  EXPECT_THROW(brute_membership_oracle(P(r, "x"), I(r, "x, y, z"), 3, tiny), BudgetExceeded);
}

TEST(MonomialHelpers, MinimalAndIntersect) {
  Ring r = r5();
  Ideal a = I(r, "x^2, x*y");
  Ideal b = I(r, "y^2");
  auto meet = monomial_intersect(monomials_of(a), monomials_of(b));
  EXPECT_TRUE(ideal_equal(monomial_ideal(r, meet), I(r, "x^2*y^2, x*y^2")));
  EXPECT_EQ(minimal_monomials(monomials_of(I(r, "x, x*y, x^2, y^3"))).size(), 2u);
  EXPECT_EQ(monomial_power(monomials_of(I(r, "x, y")), 2).size(), 3u);
}

// Randomized properties.

namespace {

Ring random_small_ring(std::mt19937_64& rng) {
  static const std::uint64_t primes[] = {2, 3, 5, 7};
  return make_ring(primes[rng() % 4], frobcheck::testing::var_names(2 + rng() % 2));
}

Polynomial random_homogeneous(const Ring& r, std::mt19937_64& rng, unsigned degree) {
  return frobcheck::testing::random_poly(r, rng, 3, degree, true);
}

Ideal random_homogeneous_ideal(const Ring& r, std::mt19937_64& rng) {
  std::vector<Polynomial> gens;
  std::size_t k = 1 + rng() % 3;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_homogeneous(r, rng, 1 + rng() % 2));
  return Ideal(r, gens);
}

Ideal random_ideal(const Ring& r, std::mt19937_64& rng) {
  std::vector<Polynomial> gens;
  std::size_t k = 1 + rng() % 2;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(frobcheck::testing::random_poly(r, rng, 3, 2));
  return Ideal(r, gens);
}

Ideal random_monomial_ideal(const Ring& r, std::mt19937_64& rng, std::size_t max_gens, unsigned max_degree) {
  std::vector<Polynomial> gens;
  std::size_t k = 1 + rng() % max_gens;
  for (std::size_t i = 0; i < k; ++i) {
    Monomial m;
    unsigned d = 1 + rng() % max_degree;
    for (unsigned j = 0; j < d; ++j) m[rng() % r.num_vars()] += 1;
    gens.push_back(Polynomial::term(r, m, 1));
  }
  return Ideal(r, gens);
}

unsigned min_generator_degree(const Ideal& J) {
  unsigned d = ~0u;
  for (const auto& g : J.generators()) d = std::min<unsigned>(d, static_cast<unsigned>(g.total_degree()));
  return d;
}

}  // namespace

// For homogeneous I and homogeneous f of degree d, f is in I iff it is a
// combination with cofactors of degree d - deg(g_i); so the linear-algebra
// oracle at that bound decides membership exactly.
TEST(IdealProperties, MembershipAgreesWithLinearAlgebra) {
  std::mt19937_64 rng(101);
  int members = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Ring r = random_small_ring(rng);
    Ideal J = random_homogeneous_ideal(r, rng);
    unsigned d = 2 + rng() % 2;
    Polynomial f(r);
    if (trial % 2 == 0) {
      for (const auto& g : J.generators())
        if (g.total_degree() <= d) f += random_homogeneous(r, rng, d - g.total_degree()) * g;
    } else {
      f = random_homogeneous(r, rng, d);
    }
    unsigned lo = min_generator_degree(J);
    bool gb = J.contains(f);
    bool oracle = d >= lo ? brute_membership_oracle(f, J, d - lo) : f.is_zero();
    ASSERT_EQ(gb, oracle) << J.to_string() << " f=" << f;
    members += gb;
  }
  EXPECT_GT(members, 50);
}

TEST(IdealProperties, BracketPowerIgnoresGeneratingSet) {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 200; ++trial) {
    Ring r = random_small_ring(rng);
    Ideal J = random_ideal(r, rng);
    std::vector<Polynomial> other = J.generators();
    // Add a redundant combination and rescale the first generator.
    Polynomial extra(r);
    for (const auto& g : J.generators()) extra += frobcheck::testing::random_poly(r, rng, 2, 1) * g;
    other.push_back(extra);
    other[0] = other[0].scaled(1 + rng() % (r.characteristic() - 1));
    unsigned e = 1 + rng() % 2;
    ASSERT_TRUE(ideal_equal(bracket_power(J, e), bracket_power(Ideal(r, other), e))) << J.to_string();
  }
}

TEST(IdealProperties, ColonTimesDivisorInsideIdeal) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    Ring r = random_small_ring(rng);
    Ideal A = random_ideal(r, rng);
    Ideal B = random_ideal(r, rng);
    if (B.is_zero()) continue;
    Ideal C = ideal_colon(A, B);
    ASSERT_TRUE(ideal_subset(ideal_product(C, B), A).holds) << A.to_string() << " : " << B.to_string();
    ASSERT_TRUE(ideal_subset(A, C).holds);
    // Membership in (A : g) matches the definition.
    const Polynomial& g = B.generators()[0];
    Polynomial f = frobcheck::testing::random_poly(r, rng, 3, 2);
    ASSERT_EQ(ideal_colon(A, g).contains(f), A.contains(f * g));
  }
}

TEST(IdealProperties, IntersectionMatchesMonomialEnumeration) {
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 200; ++trial) {
    Ring r = random_small_ring(rng);
    Ideal A = random_monomial_ideal(r, rng, 3, 3);
    Ideal B = random_monomial_ideal(r, rng, 3, 3);
    Ideal meet = ideal_intersect(A, B);
    // A monomial lies in a monomial ideal iff some generator divides it.
    auto in = [](const Ideal& J, const Monomial& m) {
      for (const auto& g : J.generators())
        if (g.leading_monomial().divides(m)) return true;
      return false;
    };
    Monomial m;
    const std::size_t n = r.num_vars();
    for (unsigned code = 0; code < 343; ++code) {
      unsigned c = code;
      for (std::size_t v = 0; v < n; ++v) {
        m[v] = c % 7;
        c /= 7;
      }
      ASSERT_EQ(meet.contains(Polynomial::term(r, m, 1)), in(A, m) && in(B, m));
    }
  }
}

TEST(IdealProperties, IntersectionOfPolynomialIdeals) {
  std::mt19937_64 rng(105);
  for (int trial = 0; trial < 100; ++trial) {
    Ring r = random_small_ring(rng);
    Ideal A = random_ideal(r, rng);
    Ideal B = random_ideal(r, rng);
    Ideal meet = ideal_intersect(A, B);
    ASSERT_TRUE(ideal_subset(meet, A).holds);
    ASSERT_TRUE(ideal_subset(meet, B).holds);
    ASSERT_TRUE(ideal_subset(ideal_product(A, B), meet).holds);
    Polynomial f = frobcheck::testing::random_poly(r, rng, 3, 3);
    ASSERT_EQ(meet.contains(f), A.contains(f) && B.contains(f));
  }
}

TEST(IdealProperties, PigeonholeForMonomialIdeals) {
  std::mt19937_64 rng(106);
  for (int trial = 0; trial < 200; ++trial) {
    Ring r = random_small_ring(rng);
    std::uint64_t p = r.characteristic() > 3 ? 2 : r.characteristic();
    Ring rp = make_ring(p, r.variables());
    Ideal J = random_monomial_ideal(rp, rng, 3, 2);
    const unsigned h = static_cast<unsigned>(J.generators().size());
    const unsigned q = static_cast<unsigned>(p);
    ASSERT_TRUE(ideal_subset(ideal_power(J, h * q - h + 1), bracket_power(J, 1)).holds) << J.to_string();
  }
}
