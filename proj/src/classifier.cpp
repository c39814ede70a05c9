#include "cyclofac/classifier.hpp"

#include <algorithm>
#include <numeric>

#include "cyclofac/error.hpp"
#include "cyclofac/number_theory.hpp"
#include "cyclofac/oracle.hpp"
#include "cyclofac/verification.hpp"

namespace cyclofac {

namespace {

// Trial-division cross-checks cost O(deg^2) cyclotomic candidates; keep them
// to small degrees even in verification mode.
constexpr Exponent kVerifyTrialDivisionDegree = 64;

int sign_of(const Integer& x) { return sgn(x) < 0 ? -1 : 1; }

void require_sum_and_prime(const HypothesisReport& rep) {
  if (!rep.sum_condition_holds) {
    throw Error(ErrorCode::HypothesisViolation,
                "|a_0| = " + Integer(abs(rep.constant_term)).get_str() + " but the other coefficients sum to " +
                    rep.tail_sum.get_str());
  }
  if (!rep.a0_is_prime) {
    throw Error(ErrorCode::HypothesisViolation,
                "|a_0| = " + Integer(abs(rep.constant_term)).get_str() + " is not prime");
  }
}

void inconsistent(const std::string& what) {
  throw Error(ErrorCode::InternalInconsistency, what);
}

}  // namespace

std::vector<SignedBinomial> HypothesisReport::binomials() const {
  std::vector<SignedBinomial> out;
  out.reserve(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) out.emplace_back(exponents[i], signs[i]);
  return out;
}

HypothesisReport hypothesis_check(const SparsePoly& f) {
  if (f.is_constant()) throw Error(ErrorCode::ConstantInput, "polynomial is constant");
  HypothesisReport rep;
  rep.constant_term = f.constant_term();
  if (rep.constant_term == 0) throw Error(ErrorCode::ConstantTermZero, "f(0) = 0");
  const Integer a0_abs = abs(rep.constant_term);
  if (mpz_sizeinbase(a0_abs.get_mpz_t(), 2) > 64) {
    throw Error(ErrorCode::A0TooLarge, "|a_0| >= 2^64; primality would be probabilistic");
  }
  rep.tail_sum = 0;
  const auto terms = f.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (it->exponent == 0) continue;
    rep.tail_sum += abs(it->coeff);
    rep.exponents.push_back(it->exponent);
    rep.signs.push_back(sign_of(rep.constant_term) * sign_of(it->coeff));
  }
  rep.sum_condition_holds = a0_abs == rep.tail_sum;
  rep.a0_is_prime = is_prime_u64(mpz_get_ui(a0_abs.get_mpz_t()));
  return rep;
}

Decomposition decompose(const SparsePoly& f) {
  const HypothesisReport rep = hypothesis_check(f);
  require_sum_and_prime(rep);

  Decomposition out;
  out.certificate = rep.binomials();
  out.cyclotomic = family_gcd(out.certificate);
  out.irreducible = out.cyclotomic.is_constant();

  if (out.irreducible) {
    out.noncyclotomic = f;
  } else {
    auto q = divide_exact(f, out.cyclotomic);
    if (!q) inconsistent("f_c = " + to_string(out.cyclotomic) + " does not divide " + to_string(f));
    out.noncyclotomic = std::move(*q);
    if (mul(out.cyclotomic, out.noncyclotomic) != f) inconsistent("f_c * f_n != f");
  }

  if (rep.exponents.size() == 1) {
    // f = a_0 +- |a_0| x^n: the cofactor is the content.
    if (!out.noncyclotomic.is_constant()) inconsistent("binomial cofactor is not constant");
  } else {
    if (out.noncyclotomic.is_constant()) inconsistent("f_n is constant");
    if (is_reciprocal(out.noncyclotomic)) inconsistent("f_n = " + to_string(out.noncyclotomic) + " is reciprocal");
  }

  if (verification_enabled() && f.degree() <= kVerifyDegreeLimit) {
    if (!squarefree_part_check(f).is_squarefree) inconsistent(to_string(f) + " is not squarefree");
    if (f.degree() <= kVerifyTrialDivisionDegree && cyclotomic_part(f) != out.cyclotomic) {
      inconsistent("closed-form f_c disagrees with trial division for " + to_string(f));
    }
  }
  return out;
}

std::string_view to_string(Verdict v) noexcept {
  return v == Verdict::Irreducible ? "irreducible" : "reducible";
}

bool corollary_even_part(const SparsePoly& f) {
  for (const auto& t : f.terms()) {
    if (t.coeff < 0) throw Error(ErrorCode::NegativeCoefficient, "coefficients must be positive");
  }
  const HypothesisReport rep = hypothesis_check(f);
  require_sum_and_prime(rep);
  const Exponent first = even_part(rep.exponents.front());
  const bool irreducible = std::any_of(rep.exponents.begin(), rep.exponents.end(),
                                       [first](Exponent n) { return even_part(n) != first; });
  if (verification_enabled() && decompose(f).irreducible != irreducible) {
    inconsistent("even-part criterion disagrees with decompose for " + to_string(f));
  }
  return irreducible;
}

std::optional<Verdict> corollary_consecutive(const SparsePoly& f) {
  const HypothesisReport rep = hypothesis_check(f);
  require_sum_and_prime(rep);
  bool adjacent = false;
  for (std::size_t j = 1; j < rep.exponents.size(); ++j) {
    adjacent = adjacent || rep.exponents[j] == rep.exponents[j - 1] + 1;
  }
  if (!adjacent) return std::nullopt;
  const bool reducible = eval_int(f, 1) == 0 || eval_int(f, -1) == 0;
  const Verdict v = reducible ? Verdict::Reducible : Verdict::Irreducible;
  if (verification_enabled() && decompose(f).irreducible != !reducible) {
    inconsistent("consecutive-exponent criterion disagrees with decompose for " + to_string(f));
  }
  return v;
}

PSVerdict panitopol_stefanescu(const SparsePoly& f) {
  if (f.is_constant()) throw Error(ErrorCode::ConstantInput, "polynomial is constant");
  const Integer a0 = abs(f.constant_term());
  if (a0 == 0) throw Error(ErrorCode::ConstantTermZero, "f(0) = 0");
  Integer rest = 0;
  for (const auto& t : f.terms()) {
    if (t.exponent != 0) rest += abs(t.coeff);
  }
  if (a0 <= rest) return PSVerdict::Inconclusive;
  if (content(f) != 1) return PSVerdict::Inconclusive;
  if (mpz_sizeinbase(a0.get_mpz_t(), 2) <= 64 && is_prime_u64(mpz_get_ui(a0.get_mpz_t()))) {
    return PSVerdict::Irreducible;
  }
  // sqrt(A) - sqrt(B) < 1  <=>  A < B + 2 sqrt(B) + 1  <=>  t < 2 sqrt(B) with
  // t = A - B - 1; both sides are nonnegative when t >= 0, so square: t^2 < 4B.
  const Integer b = abs(f.leading_coefficient());
  const Integer t = a0 - b - 1;
  if (t < 0 || t * t < 4 * b) return PSVerdict::Irreducible;
  return PSVerdict::Inconclusive;
}

bool theorem_gen_check(const SparsePoly& f, const SparsePoly& g) {
  const HypothesisReport rep = hypothesis_check(f);
  if (!rep.sum_condition_holds) {
    throw Error(ErrorCode::HypothesisViolation, "|a_0| differs from the sum of the other coefficients");
  }
  if (g.is_constant()) throw Error(ErrorCode::HypothesisViolation, "factor must be nonconstant");
  if (content(g) != 1) throw Error(ErrorCode::HypothesisViolation, "factor must be primitive");
  if (!divide_exact(f, g)) throw Error(ErrorCode::NotAFactor, to_string(g) + " does not divide " + to_string(f));
  const Integer b0 = abs(g.constant_term());
  if (b0 == 0 || b0 > abs(g.leading_coefficient())) {
    throw Error(ErrorCode::HypothesisViolation, "factor needs 0 < |g(0)| <= |lc(g)|");
  }
  return is_cyclotomic_product(g);
}

SparsePoly general_cyclotomic_part(const SparsePoly& f) {
  const HypothesisReport rep = hypothesis_check(f);
  if (!rep.sum_condition_holds) {
    throw Error(ErrorCode::HypothesisViolation, "|a_0| differs from the sum of the other coefficients");
  }
  SparsePoly fc = family_gcd(rep.binomials());
  if (verification_enabled() && f.degree() <= kVerifyTrialDivisionDegree && cyclotomic_part(f) != fc) {
    inconsistent("closed-form cyclotomic part disagrees with trial division for " + to_string(f));
  }
  return fc;
}

// ---------------------------------------------------------------------------
// Trinomials and quadrinomials

std::string_view to_string(TrinomialCase c) noexcept {
  switch (c) {
    case TrinomialCase::None: return "none";
    case TrinomialCase::A: return "A";
    case TrinomialCase::B: return "B";
    case TrinomialCase::C: return "C";
    case TrinomialCase::UnitRootOne: return "unit-root-one";
  }
  return "none";
}

SparsePoly make_trinomial(const Integer& a, const Integer& b, const Integer& p, Exponent n,
                          Exponent m, int eps1, int eps2) {
  return SparsePoly::from_terms({{n, a}, {m, b * eps1}, {0, p * eps2}});
}

namespace {

void check_sign(int eps) {
  if (eps != 1 && eps != -1) throw Error(ErrorCode::InvalidArgument, "sign must be +-1");
}

}  // namespace

TrinomialVerdict classify_trinomial(const Integer& a, const Integer& b, const Integer& p,
                                    Exponent n, Exponent m, int eps1, int eps2) {
  check_sign(eps1);
  check_sign(eps2);
  if (a <= 0 || b <= 0 || a + b != p) throw Error(ErrorCode::HypothesisViolation, "need positive a, b with a + b = p");
  if (mpz_sizeinbase(p.get_mpz_t(), 2) > 64 || !is_prime_u64(mpz_get_ui(p.get_mpz_t()))) {
    throw Error(ErrorCode::HypothesisViolation, "p = " + p.get_str() + " is not prime");
  }
  if (!(n > m && m >= 1)) throw Error(ErrorCode::HypothesisViolation, "need n > m >= 1");

  const Exponent g = std::gcd(n, m);
  const Exponent en = even_part(n);
  const Exponent em = even_part(m);
  TrinomialVerdict v;
  if (eps1 == 1 && eps2 == -1) {
    v = {true, TrinomialCase::UnitRootOne, SparsePoly::binomial(g, -1)};
  } else if (eps1 == -1 && eps2 == 1 && en < em) {
    v = {true, TrinomialCase::A, SparsePoly::binomial(g, 1)};
  } else if (eps1 == -1 && eps2 == -1 && en > em) {
    v = {true, TrinomialCase::B, SparsePoly::binomial(g, 1)};
  } else if (eps1 == 1 && eps2 == 1 && en == em) {
    v = {true, TrinomialCase::C, SparsePoly::binomial(g, 1)};
  }

  if (verification_enabled()) {
    const Decomposition d = decompose(make_trinomial(a, b, p, n, m, eps1, eps2));
    if (d.irreducible == v.reducible || d.cyclotomic != v.cyclo_factor) {
      inconsistent("trinomial classification disagrees with decompose");
    }
  }
  return v;
}

namespace {

// Exponents of the closed-form discriminant are O(n); refuse sizes that
// would allocate absurd integers.
constexpr Exponent kDiscriminantDegreeLimit = Exponent{1} << 20;
constexpr Exponent kVerifyResultantDegree = 64;

Integer ipow(const Integer& base, Exponent e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

Integer general_trinomial_discriminant(Exponent n, Exponent m, const Integer& c_n,
                                       const Integer& c_m, const Integer& c_0) {
  if (!(n > m && m >= 1)) throw Error(ErrorCode::InvalidArgument, "need n > m >= 1");
  if (c_n == 0 || c_m == 0 || c_0 == 0) {
    throw Error(ErrorCode::DegenerateTrinomial, "all three coefficients must be nonzero");
  }
  if (n > kDiscriminantDegreeLimit) throw Error(ErrorCode::BoundExceeded, "degree too large for the closed form");
  const Exponent d = std::gcd(n, m);
  const Exponent k = n - m;
  const Integer lhs = ipow(Integer(static_cast<unsigned long>(n)), n / d) * ipow(c_n, m / d) * ipow(c_0, k / d);
  Integer rhs = ipow(Integer(static_cast<unsigned long>(k)), k / d) *
                ipow(Integer(static_cast<unsigned long>(m)), m / d) * ipow(c_m, n / d);
  if ((n / d) % 2 == 1) rhs = -rhs;
  Integer disc = ipow(c_0, m - 1) * ipow(c_n, k - 1) * ipow(lhs - rhs, d);
  // (-1)^(n(n-1)/2)
  if ((n % 4 == 2) || (n % 4 == 3)) disc = -disc;
  if (verification_enabled() && n <= kVerifyResultantDegree) {
    const SparsePoly f = SparsePoly::from_terms({{n, c_n}, {m, c_m}, {0, c_0}});
    if (discriminant(f) != disc) inconsistent("closed-form discriminant disagrees with Res(f, f') for " + to_string(f));
  }
  return disc;
}

Integer trinomial_discriminant(Exponent n, Exponent m, const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) throw Error(ErrorCode::DegenerateTrinomial, "x^n + a x^m + b needs a, b != 0");
  return general_trinomial_discriminant(n, m, 1, a, b);
}

SeparabilityReport trinomial_separable(const Integer& a, const Integer& b, const Integer& p,
                                       Exponent n, Exponent m, int eps1, int eps2) {
  check_sign(eps1);
  check_sign(eps2);
  if (a <= 0 || b <= 0 || p <= 0) throw Error(ErrorCode::HypothesisViolation, "a, b, p must be positive");
  if (!(n > m && m >= 1)) throw Error(ErrorCode::HypothesisViolation, "need n > m >= 1");
  if (b > p) throw Error(ErrorCode::HypothesisViolation, "need b <= p");
  if (mpz_sizeinbase(p.get_mpz_t(), 2) > 64 || !is_prime_u64(mpz_get_ui(p.get_mpz_t()))) {
    throw Error(ErrorCode::HypothesisViolation, "p = " + p.get_str() + " is not prime");
  }
  if (verification_enabled() && n <= kVerifyDegreeLimit) {
    const SparsePoly f = make_trinomial(a, b, p, n, m, eps1, eps2);
    if (!squarefree_part_check(f).is_squarefree) inconsistent(to_string(f) + " has a repeated factor");
    if (general_trinomial_discriminant(n, m, a, b * eps1, p * eps2) == 0) {
      inconsistent(to_string(f) + " has zero discriminant");
    }
  }
  return {true, true, SparsePoly::constant(1)};
}

SparsePoly make_quadrinomial(Exponent n, Exponent m, Exponent r, int eps1, int eps2, int eps3) {
  return SparsePoly::from_terms({{n, Integer(1)}, {m, Integer(eps1)}, {r, Integer(eps2)}, {0, Integer(eps3)}});
}

SeparabilityReport quadrinomial_separable(Exponent n, Exponent m, Exponent r, int eps1,
                                          int eps2, int eps3) {
  check_sign(eps1);
  check_sign(eps2);
  check_sign(eps3);
  if (!(n > m && m > r && r >= 1)) {
    throw Error(ErrorCode::ExponentCollision, "need n > m > r >= 1");
  }
  const SparsePoly f = make_quadrinomial(n, m, r, eps1, eps2, eps3);
  // f = h(x^d) with h(0) != 0 is separable iff h is, and the value test
  // only holds for h: x^8+x^6+x^2+1 = (x^2+1)^2 (x^4-x^2+1).
  const Exponent d = std::gcd(n, std::gcd(m, r));
  const SparsePoly h = make_quadrinomial(n / d, m / d, r / d, eps1, eps2, eps3);
  if (eval_int(h, 1) != 0 && eval_int(h, -1) != 0) {
    if (verification_enabled() && n <= kVerifyDegreeLimit && !squarefree_part_check(f).is_squarefree) {
      inconsistent(to_string(f) + " has a repeated factor although its reduction is nonzero at +-1");
    }
    return {true, true, SparsePoly::constant(1)};
  }
  SquarefreeCheck sq = squarefree_part_check(f);
  return {sq.is_squarefree, false, std::move(sq.repeated)};
}

}  // namespace cyclofac
