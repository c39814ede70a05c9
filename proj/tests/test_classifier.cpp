#include <gtest/gtest.h>

#include <functional>

#include "cyclofac/classifier.hpp"
#include "cyclofac/error.hpp"
#include "cyclofac/parse.hpp"
#include "cyclofac/verification.hpp"

using namespace cyclofac;

namespace {

SparsePoly P(const char* s) { return parse_poly(s); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InternalInconsistency;
}

class ClassifierTest : public ::testing::Test {
 protected:
  VerificationScope scope_{true};
};

}  // namespace

TEST_F(ClassifierTest, HypothesisCheck) {
  auto h = hypothesis_check(P("x^6+x^2+2"));
  EXPECT_TRUE(h.sum_condition_holds);
  EXPECT_TRUE(h.a0_is_prime);
  EXPECT_EQ(h.exponents, (std::vector<Exponent>{2, 6}));
  EXPECT_EQ(h.signs, (std::vector<int>{1, 1}));

  h = hypothesis_check(P("x^4+3x^2+4"));
  EXPECT_TRUE(h.sum_condition_holds);
  EXPECT_FALSE(h.a0_is_prime);

  h = hypothesis_check(P("x^2+x+3"));
  EXPECT_FALSE(h.sum_condition_holds);
  EXPECT_EQ(h.tail_sum, 2);

  h = hypothesis_check(P("x^3-x^2+2"));
  EXPECT_EQ(h.signs, (std::vector<int>{-1, 1}));
  h = hypothesis_check(P("-x^3+x^2-2"));
  EXPECT_EQ(h.signs, (std::vector<int>{-1, 1}));
}

TEST_F(ClassifierTest, HypothesisErrors) {
  EXPECT_EQ(code_of([] { hypothesis_check(P("7")); }), ErrorCode::ConstantInput);
  EXPECT_EQ(code_of([] { hypothesis_check(P("x^2+x")); }), ErrorCode::ConstantTermZero);
  EXPECT_EQ(code_of([] { hypothesis_check(P("18446744073709551616x+18446744073709551616")); }),
            ErrorCode::A0TooLarge);
  // 2^64 - 59 is the largest 64-bit prime.
  EXPECT_TRUE(hypothesis_check(P("18446744073709551557x+18446744073709551557")).prime_sum());
}

TEST_F(ClassifierTest, DecomposeExamples) {
  Decomposition d = decompose(P("x^6+x^2+2"));
  EXPECT_EQ(d.cyclotomic, P("x^2+1"));
  EXPECT_EQ(d.noncyclotomic, P("x^4-x^2+2"));
  EXPECT_FALSE(d.irreducible);

  d = decompose(P("x^3-x^2+2"));
  EXPECT_EQ(d.cyclotomic, P("x+1"));
  EXPECT_EQ(d.noncyclotomic, P("x^2-2x+2"));
  EXPECT_FALSE(d.irreducible);

  d = decompose(P("x^2+x+2"));
  EXPECT_EQ(d.cyclotomic, P("1"));
  EXPECT_TRUE(d.irreducible);
  EXPECT_EQ(d.certificate.size(), 2u);
}

TEST_F(ClassifierTest, DecomposeBinomial) {
  const Decomposition d = decompose(P("3x^4-3"));
  EXPECT_EQ(d.cyclotomic, P("x^4-1"));
  EXPECT_EQ(d.noncyclotomic, P("3"));
  EXPECT_FALSE(d.irreducible);
}

TEST_F(ClassifierTest, DecomposeRejectsOutsideHypothesis) {
  EXPECT_EQ(code_of([] { decompose(P("x^4+3x^2+4")); }), ErrorCode::HypothesisViolation);
  EXPECT_EQ(code_of([] { decompose(P("x^2+x+3")); }), ErrorCode::HypothesisViolation);
}

TEST_F(ClassifierTest, DecomposeHugeExponents) {
  const Decomposition d = decompose(P("x^4294967296-x^2147483648+2"));
  EXPECT_EQ(d.cyclotomic, P("1"));  // e(2^32) != e(2^31); both + signs would need equal parts
  EXPECT_TRUE(d.irreducible);
  const Decomposition e = decompose(P("x^3000000+x^1000000+2"));
  EXPECT_EQ(e.cyclotomic, P("x^1000000+1"));
  EXPECT_EQ(e.noncyclotomic, P("x^2000000-x^1000000+2"));
}

TEST_F(ClassifierTest, CorollaryEvenPart) {
  EXPECT_TRUE(corollary_even_part(P("x^2+x+2")));
  EXPECT_FALSE(corollary_even_part(P("x^6+x^2+2")));
  EXPECT_TRUE(corollary_even_part(P("x^3+x^2+2")));
  EXPECT_EQ(code_of([] { corollary_even_part(P("x^3-x^2+2")); }), ErrorCode::NegativeCoefficient);
  EXPECT_EQ(code_of([] { corollary_even_part(P("x^3+x^2+x+4")); }), ErrorCode::HypothesisViolation);
}

TEST_F(ClassifierTest, CorollaryConsecutive) {
  EXPECT_EQ(corollary_consecutive(P("x^3-x^2+2")), Verdict::Reducible);
  EXPECT_EQ(corollary_consecutive(P("x^3+x^2+2")), Verdict::Irreducible);
  EXPECT_EQ(corollary_consecutive(P("x^6+x^2+2")), std::nullopt);
  // adjacent pair not at the bottom
  EXPECT_EQ(corollary_consecutive(P("x^7+x^6+x^2+3")), Verdict::Irreducible);
  EXPECT_EQ(code_of([] { corollary_consecutive(P("x^2+x+3")); }), ErrorCode::HypothesisViolation);
}

TEST_F(ClassifierTest, PanitopolStefanescu) {
  EXPECT_EQ(panitopol_stefanescu(P("x^2+x+5")), PSVerdict::Irreducible);
  EXPECT_EQ(panitopol_stefanescu(P("2x^2+x+4")), PSVerdict::Irreducible);
  EXPECT_EQ(panitopol_stefanescu(P("x^2+x+2")), PSVerdict::Inconclusive);
  // sqrt(9) - sqrt(4) = 1 is not < 1
  EXPECT_EQ(panitopol_stefanescu(P("4x^2+x+9")), PSVerdict::Inconclusive);
  // sqrt(8) - sqrt(4) < 1
  EXPECT_EQ(panitopol_stefanescu(P("4x^2+x+8")), PSVerdict::Irreducible);
  // content 3: reducible over the integers
  EXPECT_EQ(panitopol_stefanescu(P("3x^2+3x+9")), PSVerdict::Inconclusive);
  EXPECT_EQ(code_of([] { panitopol_stefanescu(P("x^2+x")); }), ErrorCode::ConstantTermZero);
}

TEST_F(ClassifierTest, TheoremGenCheck) {
  EXPECT_TRUE(theorem_gen_check(P("x^4-3x^2-4"), P("x^2+1")));
  EXPECT_TRUE(theorem_gen_check(P("x^6+x^2+2"), P("x^2+1")));
  EXPECT_EQ(code_of([] { theorem_gen_check(P("x^4-3x^2-4"), P("x^2-4")); }),
            ErrorCode::HypothesisViolation);
  EXPECT_EQ(code_of([] { theorem_gen_check(P("x^4-3x^2-4"), P("x^2+x+1")); }), ErrorCode::NotAFactor);
}

TEST_F(ClassifierTest, GeneralCyclotomicPart) {
  EXPECT_EQ(general_cyclotomic_part(P("x^4+3x^2+4")), P("1"));
  EXPECT_EQ(general_cyclotomic_part(P("x^4-3x^2-4")), P("x^2+1"));
  EXPECT_EQ(general_cyclotomic_part(P("x^8-3x^4-4")), P("x^4+1"));
  EXPECT_TRUE(divide_exact(P("x^8-3x^4-4"), P("x^4+1")).has_value());
  EXPECT_EQ(code_of([] { general_cyclotomic_part(P("x^2+x+3")); }), ErrorCode::HypothesisViolation);
}

TEST_F(ClassifierTest, ClassifyTrinomialExamples) {
  auto v = classify_trinomial(1, 1, 2, 3, 2, -1, 1);
  EXPECT_TRUE(v.reducible);
  EXPECT_EQ(v.case_tag, TrinomialCase::A);
  EXPECT_EQ(v.cyclo_factor, P("x+1"));

  v = classify_trinomial(1, 1, 2, 6, 2, 1, 1);
  EXPECT_TRUE(v.reducible);
  EXPECT_EQ(v.case_tag, TrinomialCase::C);
  EXPECT_EQ(v.cyclo_factor, P("x^2+1"));

  v = classify_trinomial(1, 1, 2, 4, 2, 1, 1);
  EXPECT_FALSE(v.reducible);
  EXPECT_EQ(v.case_tag, TrinomialCase::None);
  EXPECT_EQ(v.cyclo_factor, P("1"));

  v = classify_trinomial(1, 1, 2, 3, 2, 1, -1);
  EXPECT_TRUE(v.reducible);
  EXPECT_EQ(v.case_tag, TrinomialCase::UnitRootOne);
  EXPECT_EQ(v.cyclo_factor, P("x-1"));

  v = classify_trinomial(2, 1, 3, 6, 4, -1, -1);  // e(6) = 2 < e(4) = 4: not case B
  EXPECT_FALSE(v.reducible);
  v = classify_trinomial(2, 1, 3, 4, 2, -1, -1);  // e(4) > e(2): case B
  EXPECT_EQ(v.case_tag, TrinomialCase::B);
  EXPECT_EQ(v.cyclo_factor, P("x^2+1"));
}

TEST_F(ClassifierTest, ClassifyTrinomialErrors) {
  EXPECT_EQ(code_of([] { classify_trinomial(1, 2, 4, 3, 1, 1, 1); }), ErrorCode::HypothesisViolation);
  EXPECT_EQ(code_of([] { classify_trinomial(1, 1, 3, 3, 1, 1, 1); }), ErrorCode::HypothesisViolation);
  EXPECT_EQ(code_of([] { classify_trinomial(1, 1, 2, 2, 2, 1, 1); }), ErrorCode::HypothesisViolation);
}

TEST_F(ClassifierTest, TrinomialDiscriminant) {
  EXPECT_EQ(trinomial_discriminant(2, 1, 1, -2), 9);
  EXPECT_EQ(trinomial_discriminant(3, 1, 1, 1), -31);
  // x^4+x^2+1 = (x^2+x+1)(x^2-x+1); its discriminant is 144.
  EXPECT_EQ(trinomial_discriminant(4, 2, 1, 1), 144);
  EXPECT_EQ(code_of([] { trinomial_discriminant(2, 1, 0, 1); }), ErrorCode::DegenerateTrinomial);
  EXPECT_EQ(code_of([] { trinomial_discriminant(2, 1, 1, 0); }), ErrorCode::DegenerateTrinomial);
  EXPECT_EQ(code_of([] { trinomial_discriminant(2, 2, 1, 1); }), ErrorCode::InvalidArgument);
}

TEST_F(ClassifierTest, GeneralTrinomialDiscriminant) {
  // 2x^2 + 3x + 1: 9 - 8 = 1
  EXPECT_EQ(general_trinomial_discriminant(2, 1, 2, 3, 1), 1);
  // a x^3 + c x + d: -4 a c^3 - 27 a^2 d^2 with a = 2, c = -1, d = 5
  EXPECT_EQ(general_trinomial_discriminant(3, 1, 2, -1, 5), -4 * 2 * -1 - 27 * 4 * 25);
}

TEST_F(ClassifierTest, TrinomialSeparable) {
  auto s = trinomial_separable(1, 2, 3, 5, 2, 1, 1);
  EXPECT_TRUE(s.separable);
  EXPECT_TRUE(s.by_theorem);
  s = trinomial_separable(1, 1, 2, 3, 2, -1, 1);
  EXPECT_TRUE(s.separable);
  s = trinomial_separable(2, 3, 5, 7, 3, -1, -1);
  EXPECT_TRUE(s.separable);
  s = trinomial_separable(1, 2, 2, 2, 1, 1, 1);  // n = m + 1 = 2 with b = p
  EXPECT_TRUE(s.separable);
  EXPECT_EQ(code_of([] { trinomial_separable(1, 4, 3, 5, 2, 1, 1); }), ErrorCode::HypothesisViolation);
  EXPECT_EQ(code_of([] { trinomial_separable(1, 2, 4, 5, 2, 1, 1); }), ErrorCode::HypothesisViolation);
}

TEST_F(ClassifierTest, QuadrinomialSeparable) {
  auto s = quadrinomial_separable(4, 3, 1, 1, 1, 1);
  EXPECT_FALSE(s.separable);
  EXPECT_FALSE(s.by_theorem);
  EXPECT_EQ(s.repeated_factor, P("x+1"));

  s = quadrinomial_separable(8, 7, 1, -1, -1, -1);
  EXPECT_TRUE(s.separable);
  EXPECT_TRUE(s.by_theorem);

  s = quadrinomial_separable(4, 3, 1, 1, 1, -1);
  EXPECT_TRUE(s.separable);
  EXPECT_TRUE(s.by_theorem);

  s = quadrinomial_separable(3, 2, 1, 1, 1, 1);  // (x+1)(x^2+1): f(-1) = 0 but squarefree
  EXPECT_TRUE(s.separable);
  EXPECT_FALSE(s.by_theorem);

  EXPECT_EQ(code_of([] { quadrinomial_separable(4, 4, 1, 1, 1, 1); }), ErrorCode::ExponentCollision);
  EXPECT_EQ(code_of([] { quadrinomial_separable(4, 2, 3, 1, 1, 1); }), ErrorCode::ExponentCollision);
}

TEST_F(ClassifierTest, QuadrinomialSeparableWithCommonExponentFactor) {
  // f(+-1) = 4 yet f = (x^2+1)^2 (x^4-x^2+1).
  const auto s = quadrinomial_separable(8, 6, 2, 1, 1, 1);
  EXPECT_FALSE(s.separable);
  EXPECT_FALSE(s.by_theorem);
  EXPECT_EQ(s.repeated_factor, P("x^2+1"));
}

TEST_F(ClassifierTest, QuadrinomialSeparableAgreesWithGcd) {
  for (Exponent n = 3; n <= 24; ++n) {
    for (Exponent m = 2; m < n; ++m) {
      for (Exponent r = 1; r < m; ++r) {
        for (int mask = 0; mask < 8; ++mask) {
          const int e1 = mask & 1 ? -1 : 1, e2 = mask & 2 ? -1 : 1, e3 = mask & 4 ? -1 : 1;
          const SparsePoly f = make_quadrinomial(n, m, r, e1, e2, e3);
          ASSERT_EQ(quadrinomial_separable(n, m, r, e1, e2, e3).separable,
                    gcd_primitive(f, derivative(f)).is_constant())
              << to_string(f);
        }
      }
    }
  }
}

TEST(Classifier, QuarticFamilyIdentity) {
  for (Exponent n = 1; n <= 3; ++n) {
    for (long a : {2L, 3L}) {
      const SparsePoly lhs = SparsePoly::from_terms(
          {{4 * n, Integer(1)}, {2 * n, Integer(-(a * a - 1))}, {0, Integer(-a * a)}});
      const SparsePoly rhs = SparsePoly::from_terms({{n, Integer(1)}, {0, Integer(a)}}) *
                             SparsePoly::from_terms({{n, Integer(1)}, {0, Integer(-a)}}) *
                             SparsePoly::binomial(2 * n, 1);
      EXPECT_EQ(lhs, rhs);
      const SparsePoly printed = SparsePoly::from_terms({{n, Integer(1)}, {0, Integer(a)}}) *
                                 SparsePoly::from_terms({{n, Integer(1)}, {0, Integer(-a)}}) *
                                 SparsePoly::binomial(n, 1);
      EXPECT_NE(lhs, printed);
    }
  }
}
