#include <gtest/gtest.h>

#include <random>

#include "cyclofac/error.hpp"
#include "cyclofac/parse.hpp"
#include "cyclofac/poly.hpp"

using namespace cyclofac;

namespace {

SparsePoly P(const char* s) { return parse_poly(s); }

SparsePoly random_poly(std::mt19937_64& rng, int max_degree, int max_coeff) {
  std::vector<Term> terms;
  const int deg = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
  for (int e = 0; e <= deg; ++e) {
    if (rng() % 3 == 0) continue;
    const long c = static_cast<long>(rng() % static_cast<unsigned>(2 * max_coeff + 1)) - max_coeff;
    terms.push_back({static_cast<Exponent>(e), Integer(c)});
  }
  return SparsePoly::from_terms(std::move(terms));
}

SparsePoly random_nonzero(std::mt19937_64& rng, int max_degree, int max_coeff) {
  for (;;) {
    SparsePoly p = random_poly(rng, max_degree, max_coeff);
    if (!p.is_zero()) return p;
  }
}

}  // namespace

TEST(SparsePoly, CanonicalForm) {
  const SparsePoly p{{0, 2}, {6, 1}, {2, 1}, {2, 0}};
  ASSERT_EQ(p.term_count(), 3u);
  EXPECT_EQ(p.terms()[0].exponent, 6u);
  EXPECT_EQ(p.terms()[1].exponent, 2u);
  EXPECT_EQ(p.terms()[2].exponent, 0u);
  EXPECT_EQ(p.degree(), 6u);
  EXPECT_EQ(p.constant_term(), 2);
  EXPECT_EQ(p.coefficient(2), 1);
  EXPECT_EQ(p.coefficient(3), 0);
  EXPECT_TRUE(SparsePoly{}.is_zero());
  EXPECT_TRUE(SparsePoly({{3, 1}, {3, -1}}).is_zero());
}

TEST(SparsePoly, ZeroHasNoDegree) {
  EXPECT_THROW((void)SparsePoly{}.degree(), Error);
  EXPECT_EQ(SparsePoly{}.constant_term(), 0);
}

TEST(SparsePoly, ExponentCap) {
  EXPECT_NO_THROW(SparsePoly::monomial(1, kMaxExponent));
  try {
    (void)SparsePoly::monomial(1, kMaxExponent + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ExponentOverflow);
  }
}

TEST(SparsePoly, DenseRoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const SparsePoly p = random_poly(rng, 12, 50);
    EXPECT_EQ(DensePoly(p).to_sparse(), p);
  }
  EXPECT_EQ(DensePoly(SparsePoly{}).degree(), -1);
}

TEST(Ring, AddExamples) {
  EXPECT_EQ(P("x^2+1") + P("-x^2+x"), P("x+1"));
  EXPECT_EQ(P("x^3-x^2+2") + SparsePoly{}, P("x^3-x^2+2"));
  EXPECT_EQ(P("x^3-x^2+2") + P("x^2-2"), P("x^3"));
}

TEST(Ring, MulExamples) {
  EXPECT_EQ(P("x+1") * P("x-1"), P("x^2-1"));
  EXPECT_EQ(P("x^2-x+2") * P("x^2+x+2"), P("x^4+3x^2+4"));
  EXPECT_EQ(pow(P("x+1"), 2) * P("x^2-x+1"), P("x^4+x^3+x+1"));
}

TEST(Ring, MulDegreeAdds) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const SparsePoly p = random_nonzero(rng, 10, 9), q = random_nonzero(rng, 10, 9);
    EXPECT_EQ((p * q).degree(), p.degree() + q.degree());
  }
}

TEST(Ring, AxiomsRandomized) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    const SparsePoly a = random_poly(rng, 8, 20), b = random_poly(rng, 8, 20), c = random_poly(rng, 8, 20);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a - b, a + (-b));
    EXPECT_EQ(scale(a, 3), a + a + a);
  }
}

TEST(Division, Examples) {
  EXPECT_EQ(*divide_exact(P("x^6+x^2+2"), P("x^2+1")), P("x^4-x^2+2"));
  EXPECT_EQ(*divide_exact(P("x^3-5x+7"), P("1")), P("x^3-5x+7"));
  EXPECT_FALSE(divide_exact(P("x^2+1"), P("x+1")).has_value());
  try {
    (void)divide_exact(P("x+1"), SparsePoly{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroDivisor);
  }
}

TEST(Division, NeedsIntegralQuotient) {
  EXPECT_FALSE(divide_exact(P("x^2+1"), P("2")).has_value());
  EXPECT_FALSE(divide_exact(P("x^2-1"), P("2x-2")).has_value());
  EXPECT_EQ(*divide_exact(P("2x^2-2"), P("2x-2")), P("x+1"));
}

TEST(Division, MulRoundTripRandomized) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    const SparsePoly p = random_poly(rng, 10, 30), q = random_nonzero(rng, 6, 30);
    const auto back = divide_exact(p * q, q);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, p);
  }
}

TEST(Division, SparseLongDivisionHighDegree) {
  const SparsePoly d = P("x^5000+x^3+1");
  const SparsePoly q = P("x^7000-2x^11+5");
  EXPECT_EQ(*divide_exact(d * q, d), q);
  EXPECT_FALSE(divide_exact(d * q + P("x"), d).has_value());
  EXPECT_EQ(*divide_exact(P("x^9000-1"), P("x^4500-1")), P("x^4500+1"));
}

TEST(Division, PseudoRemainder) {
  const DensePoly a(P("3x^3+x+1")), b(P("2x^2+1"));
  const DensePoly r = pseudo_remainder(a, b);
  // lc(b)^2 a = q b + r with deg r < 2
  EXPECT_LT(r.degree(), 2);
  const SparsePoly lhs = scale(a.to_sparse(), 4) - r.to_sparse();
  EXPECT_TRUE(divide_exact(lhs, b.to_sparse()).has_value());
}

TEST(Content, NormalizeSignAndContent) {
  EXPECT_EQ(content(P("6x^2-4x+2")), 2);
  EXPECT_EQ(normalize(P("-6x^2+4x-2")), P("3x^2-2x+1"));
  EXPECT_EQ(normalize(DensePoly(P("-4x+8"))).to_sparse(), P("x-2"));
}

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd_primitive(P("x^4-1"), P("x^6-1")), P("x^2-1"));
  EXPECT_EQ(gcd_primitive(P("-6x^2+12"), SparsePoly{}), P("x^2-2"));
  EXPECT_EQ(gcd_primitive(P("x^4+x^3+x+1"), P("4x^3+3x^2+1")), P("x+1"));
  EXPECT_EQ(gcd_primitive(P("x^2+1"), P("x+1")), P("1"));
  EXPECT_THROW((void)gcd_primitive(SparsePoly{}, SparsePoly{}), Error);
}

TEST(Gcd, DividesBothAndScalesRandomized) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 150; ++i) {
    const SparsePoly p = random_nonzero(rng, 6, 9), q = random_nonzero(rng, 6, 9);
    SparsePoly r = normalize(random_nonzero(rng, 3, 9));
    const SparsePoly g = gcd_primitive(p, q);
    EXPECT_TRUE(divide_exact(p, g).has_value());
    EXPECT_TRUE(divide_exact(q, g).has_value());
    EXPECT_GT(g.leading_coefficient(), 0);
    EXPECT_EQ(content(g), 1);
    EXPECT_EQ(gcd_primitive(p * r, q * r), normalize(r * g));
  }
}

TEST(Derivative, Examples) {
  EXPECT_EQ(derivative(P("x^6+x^2+2")), P("6x^5+2x"));
  EXPECT_TRUE(derivative(P("7")).is_zero());
  EXPECT_EQ(derivative(P("x^4+x^3+x+1")), P("4x^3+3x^2+1"));
}

TEST(Eval, Examples) {
  EXPECT_EQ(eval_int(P("x^3-x^2+2"), -1), 0);
  EXPECT_EQ(eval_int(P("x^8-x^7-x-1"), 1), -2);
  EXPECT_EQ(eval_int(SparsePoly{}, 17), 0);
  EXPECT_EQ(eval_int(P("x^100+1"), 2), Integer("1267650600228229401496703205377"));
}

TEST(Eval, HomomorphismRandomized) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const SparsePoly p = random_poly(rng, 9, 40), q = random_poly(rng, 9, 40);
    const Integer t = static_cast<long>(rng() % 21) - 10;
    EXPECT_EQ(eval_int(p * q, t), eval_int(p, t) * eval_int(q, t));
    EXPECT_EQ(eval_int(p + q, t), eval_int(p, t) + eval_int(q, t));
  }
}

TEST(Reciprocal, Examples) {
  EXPECT_EQ(reciprocal(P("x^2+1")), P("x^2+1"));
  EXPECT_EQ(reciprocal(P("x^2-2x+2")), P("2x^2-2x+1"));
  EXPECT_TRUE(is_reciprocal(P("x^2+1")));
  EXPECT_FALSE(is_reciprocal(P("x^4-x^2+2")));
  EXPECT_TRUE(is_reciprocal(P("x-1")));
  try {
    (void)reciprocal(P("x^2+x"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConstantTermZero);
  }
}

TEST(Reciprocal, InvolutionRandomized) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 300; ++i) {
    SparsePoly p = random_nonzero(rng, 10, 20);
    if (p.constant_term() == 0) p = p + P("1");
    if (p.constant_term() == 0) continue;
    EXPECT_EQ(reciprocal(reciprocal(p)), p);
  }
}

TEST(ExponentGcd, Examples) {
  auto r = exponent_gcd_reduce(P("x^6+x^2+2"));
  EXPECT_EQ(r.d, 2u);
  EXPECT_EQ(r.h, P("x^3+x+2"));
  r = exponent_gcd_reduce(P("x^3+x+2"));
  EXPECT_EQ(r.d, 1u);
  EXPECT_EQ(r.h, P("x^3+x+2"));
  r = exponent_gcd_reduce(P("x^12+x^8+2"));
  EXPECT_EQ(r.d, 4u);
  EXPECT_EQ(r.h, P("x^3+x^2+2"));
  EXPECT_THROW((void)exponent_gcd_reduce(P("5")), Error);
}

TEST(ExponentGcd, InflateRoundTripRandomized) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const SparsePoly h = random_nonzero(rng, 8, 10);
    if (h.is_constant()) continue;
    const Exponent d = 1 + rng() % 6;
    const SparsePoly p = inflate(h, d);
    const auto r = exponent_gcd_reduce(p);
    EXPECT_EQ(r.d % d, 0u);
    EXPECT_EQ(inflate(r.h, r.d), p);
  }
}

TEST(Squarefree, Examples) {
  auto s = squarefree_part_check(P("x^4+x^3+x+1"));
  EXPECT_FALSE(s.is_squarefree);
  EXPECT_EQ(s.repeated, P("x+1"));
  s = squarefree_part_check(P("x^6+x^2+2"));
  EXPECT_TRUE(s.is_squarefree);
  EXPECT_EQ(s.repeated, P("1"));
  s = squarefree_part_check(P("x^2"));
  EXPECT_FALSE(s.is_squarefree);
  EXPECT_EQ(s.repeated, P("x"));
}

TEST(Printing, Canonical) {
  EXPECT_EQ(to_string(P("2x^4 - 3x^2 - 4")), "2x^4-3x^2-4");
  EXPECT_EQ(to_string(P("-x+1")), "-x+1");
  EXPECT_EQ(to_string(SparsePoly{}), "0");
  EXPECT_EQ(to_string(P("x")), "x");
  EXPECT_EQ(to_string(P("-1")), "-1");
}

TEST(DenseHighWater, TracksLargestDensification) {
  reset_dense_degree_high_water();
  (void)gcd_primitive(P("x^10-1"), P("x^4-1"));
  EXPECT_GE(dense_degree_high_water(), 4);
  EXPECT_LT(dense_degree_high_water(), 64);
}
