#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cyclofac/poly.hpp"

namespace cyclofac {

/// x^degree + sign, sign in {-1, +1}, degree >= 1.
class SignedBinomial {
 public:
  SignedBinomial(Exponent degree, int sign);

  Exponent degree() const noexcept { return degree_; }
  int sign() const noexcept { return sign_; }
  SparsePoly to_poly() const { return SparsePoly::binomial(degree_, sign_); }

  bool operator==(const SignedBinomial&) const = default;

 private:
  Exponent degree_;
  int sign_;
};

/// Either the constant 1 or a signed binomial.
struct BinomialGcd {
  std::optional<SignedBinomial> binomial;

  bool is_one() const noexcept { return !binomial.has_value(); }
  SparsePoly to_poly() const {
    return binomial ? binomial->to_poly() : SparsePoly::constant(1);
  }
  bool operator==(const BinomialGcd&) const = default;
};

/// Largest power of two dividing n (n >= 1).
constexpr Exponent even_part(Exponent n) noexcept { return n & (~n + 1); }

/// Largest supported cyclotomic index.
inline constexpr Exponent kCyclotomicIndexBound = 200000;

/// n-th cyclotomic polynomial. Memoized in a bounded, thread-safe LRU cache.
/// Throws BoundExceeded for n > kCyclotomicIndexBound, InvalidArgument for 0.
SparsePoly cyclotomic_poly(Exponent n);

/// Closed-form gcd of two signed binomials:
///   (x^n-1, x^m-1) = x^(n,m) - 1
///   (x^n+1, x^m+1) = x^(n,m) + 1 if e(n) = e(m), else 1
///   (x^n+1, x^m-1) = x^(n,m/2) + 1 if e(m) >= 2e(n), else 1
/// The mixed case is symmetric in argument order.
BinomialGcd binomial_gcd(const SignedBinomial& a, const SignedBinomial& b);

/// Left fold of binomial_gcd; stays in closed form and never expands a
/// polynomial. Requires a nonempty list.
BinomialGcd family_gcd_closed(std::span<const SignedBinomial> binomials);

/// family_gcd_closed as a polynomial. In verification mode the result is
/// recomputed by iterated gcd_primitive (degree permitting) and compared.
SparsePoly family_gcd(std::span<const SignedBinomial> binomials);

/// Search bound for trial division by cyclotomic polynomials on a degree-n
/// polynomial: every Phi_d dividing it has phi(d) <= n, and phi(d) >= sqrt(d/2)
/// gives d <= 2 n^2.
constexpr Exponent cyclotomic_search_bound(Exponent degree) noexcept {
  return 2 * degree * degree;
}

struct CyclotomicFactor {
  Exponent index = 0;
  unsigned multiplicity = 0;

  bool operator==(const CyclotomicFactor&) const = default;
};

struct CyclotomicSplit {
  std::vector<CyclotomicFactor> factors;  // increasing index
  SparsePoly cofactor;                    // p / prod Phi_d^k, no cyclotomic divisor left
};

/// Trial division of p by Phi_1, Phi_2 (through evaluation at +-1) and then
/// by every Phi_d with phi(d) <= deg, d <= cyclotomic_search_bound.
/// Throws ConstantTermZero if p(0) = 0, InvalidArgument if p = 0.
CyclotomicSplit split_cyclotomic(const SparsePoly& p);

/// p = +-(product of cyclotomic polynomials, multiplicities allowed).
bool is_cyclotomic_product(const SparsePoly& p);

/// Largest divisor of p that is a product of cyclotomic polynomials, with
/// multiplicity. Throws ConstantTermZero.
SparsePoly cyclotomic_part(const SparsePoly& p);

/// prod Phi_d^k over the listed factors.
SparsePoly expand_cyclotomic(std::span<const CyclotomicFactor> factors);

}  // namespace cyclofac
