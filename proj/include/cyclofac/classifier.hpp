#pragma once

// Decision procedures for integer polynomials f = a_0 + sum a_{n_i} x^{n_i}
// with |a_0| = sum |a_{n_i}|, the "prime-sum" family when |a_0| is prime.

#include <optional>
#include <string>
#include <vector>

#include "cyclofac/cyclotomic.hpp"
#include "cyclofac/poly.hpp"

namespace cyclofac {

struct HypothesisReport {
  Integer constant_term;
  Integer tail_sum;                 // sum |a_{n_i}| over the nonconstant terms
  bool sum_condition_holds = false;
  bool a0_is_prime = false;
  std::vector<Exponent> exponents;  // n_1 < ... < n_r
  std::vector<int> signs;           // sgn(a_0 a_{n_i}), aligned with exponents

  bool prime_sum() const noexcept { return sum_condition_holds && a0_is_prime; }
  /// x^{n_i} + sgn(a_0 a_{n_i})
  std::vector<SignedBinomial> binomials() const;
};

/// Throws ConstantInput, ConstantTermZero, A0TooLarge (|a_0| >= 2^64).
HypothesisReport hypothesis_check(const SparsePoly& f);

struct Decomposition {
  SparsePoly cyclotomic;     // f_c
  SparsePoly noncyclotomic;  // f_n
  bool irreducible = false;
  std::vector<SignedBinomial> certificate;
};

/// f = f_c * f_n with f_c the closed-form gcd of the certificate binomials.
/// Requires the prime-sum hypothesis (HypothesisViolation otherwise). Throws
/// InternalInconsistency if a post-invariant fails.
///
/// For a binomial f = +-p(x^n +- 1) the cofactor f_n is the constant +-p.
Decomposition decompose(const SparsePoly& f);

enum class Verdict { Irreducible, Reducible };
std::string_view to_string(Verdict v) noexcept;

/// Irreducible iff the even parts of the exponents are not all equal.
/// Positive coefficients and the prime-sum hypothesis required
/// (NegativeCoefficient, HypothesisViolation).
bool corollary_even_part(const SparsePoly& f);

/// When two nonconstant exponents are adjacent integers: reducible iff
/// f(1) = 0 or f(-1) = 0. nullopt when no such pair exists.
std::optional<Verdict> corollary_consecutive(const SparsePoly& f);

enum class PSVerdict { Irreducible, Inconclusive };

/// |a_0| > sum_{i>=1} |a_i| together with |a_0| prime or
/// sqrt|a_0| - sqrt|a_n| < 1. Inconclusive otherwise, and for non-primitive f
/// (a content factor makes f reducible over the integers).
PSVerdict panitopol_stefanescu(const SparsePoly& f);

/// For f with |a_0| = sum |a_{n_i}| and a primitive factor g of f with
/// 0 < |g(0)| <= |lc(g)|, g is a product of cyclotomic polynomials. Returns
/// that verdict. NotAFactor, HypothesisViolation on bad inputs.
bool theorem_gen_check(const SparsePoly& f, const SparsePoly& g);

/// Cyclotomic part of f when only the sum condition holds (|a_0| need not be
/// prime): gcd of x^{n_i} + sgn(a_0 a_{n_i}). Cross-checked against
/// cyclotomic_part in verification mode.
SparsePoly general_cyclotomic_part(const SparsePoly& f);

// --- Trinomials a x^n + b eps1 x^m + p eps2 ---------------------------------

enum class TrinomialCase { None, A, B, C, UnitRootOne };
std::string_view to_string(TrinomialCase c) noexcept;

struct TrinomialVerdict {
  bool reducible = false;
  TrinomialCase case_tag = TrinomialCase::None;
  SparsePoly cyclo_factor = SparsePoly::constant(1);
};

/// a x^n + b*eps1 x^m + p*eps2
SparsePoly make_trinomial(const Integer& a, const Integer& b, const Integer& p, Exponent n,
                          Exponent m, int eps1, int eps2);

/// Requires a + b = p, p prime, n > m >= 1 (HypothesisViolation).
TrinomialVerdict classify_trinomial(const Integer& a, const Integer& b, const Integer& p,
                                    Exponent n, Exponent m, int eps1, int eps2);

/// Discriminant of x^n + a x^m + b in closed form. Throws DegenerateTrinomial
/// for a = 0 or b = 0, InvalidArgument unless n > m >= 1.
Integer trinomial_discriminant(Exponent n, Exponent m, const Integer& a, const Integer& b);

/// Discriminant of c_n x^n + c_m x^m + c_0 in closed form.
Integer general_trinomial_discriminant(Exponent n, Exponent m, const Integer& c_n,
                                       const Integer& c_m, const Integer& c_0);

struct SeparabilityReport {
  bool separable = false;
  bool by_theorem = false;
  SparsePoly repeated_factor = SparsePoly::constant(1);
};

/// a x^n + b eps1 x^m + p eps2 with p prime and b <= p is always separable.
/// HypothesisViolation otherwise. Verification mode confirms gcd(f, f') = 1
/// and a nonzero discriminant.
SeparabilityReport trinomial_separable(const Integer& a, const Integer& b, const Integer& p,
                                       Exponent n, Exponent m, int eps1, int eps2);

/// x^n + eps1 x^m + eps2 x^r + eps3 = h(x^d), d = gcd(n, m, r): separable when
/// h(1) != 0 and h(-1) != 0, decided by gcd(f, f') otherwise. ExponentCollision unless n > m > r >= 1.
SeparabilityReport quadrinomial_separable(Exponent n, Exponent m, Exponent r, int eps1,
                                          int eps2, int eps3);

SparsePoly make_quadrinomial(Exponent n, Exponent m, Exponent r, int eps1, int eps2, int eps3);

}  // namespace cyclofac
