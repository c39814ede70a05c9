#pragma once

// Exact integer polynomials.
//
// SparsePoly is the canonical representation: strictly decreasing exponents,
// every stored coefficient nonzero, the empty term list is zero. DensePoly is
// the working representation for remainder sequences; conversions between the
// two are lossless.

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cyclofac {

using Integer = mpz_class;
using Exponent = std::uint64_t;

/// Exponents are machine words; anything above 2^32 is rejected.
inline constexpr Exponent kMaxExponent = Exponent{1} << 32;

struct Term {
  Exponent exponent = 0;
  Integer coeff;

  bool operator==(const Term& other) const {
    return exponent == other.exponent && coeff == other.coeff;
  }
};

class SparsePoly {
 public:
  SparsePoly() = default;

  /// {(exponent, coefficient), ...} in any order; duplicates are summed.
  SparsePoly(std::initializer_list<std::pair<Exponent, long>> terms);

  static SparsePoly from_terms(std::vector<Term> terms);
  static SparsePoly constant(Integer c);
  static SparsePoly monomial(Integer c, Exponent e);
  /// x^k + s
  static SparsePoly binomial(Exponent k, int s);
  /// coefficients[i] is the coefficient of x^i.
  static SparsePoly from_ascending(const std::vector<Integer>& coefficients);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent == 0);
  }
  /// Throws InvalidArgument on the zero polynomial.
  Exponent degree() const;
  const Integer& leading_coefficient() const;
  Integer constant_term() const;
  Integer coefficient(Exponent e) const;
  std::size_t term_count() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }

  SparsePoly operator-() const;

  bool operator==(const SparsePoly& other) const { return terms_ == other.terms_; }

 private:
  explicit SparsePoly(std::vector<Term> canonical) : terms_(std::move(canonical)) {}

  std::vector<Term> terms_;
};

class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Integer> ascending);
  explicit DensePoly(const SparsePoly& p);

  SparsePoly to_sparse() const { return SparsePoly::from_ascending(coeffs_); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree of a nonzero polynomial; -1 for zero.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const Integer& leading_coefficient() const { return coeffs_.back(); }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }

  bool operator==(const DensePoly& other) const { return coeffs_ == other.coeffs_; }

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

/// High-water mark of the largest DensePoly degree materialized by this
/// process since the last reset. Used to prove sparse paths stay sparse.
long dense_degree_high_water() noexcept;
void reset_dense_degree_high_water() noexcept;

// Ring operations.
SparsePoly add(const SparsePoly& p, const SparsePoly& q);
SparsePoly sub(const SparsePoly& p, const SparsePoly& q);
SparsePoly mul(const SparsePoly& p, const SparsePoly& q);
SparsePoly scale(const SparsePoly& p, const Integer& c);
SparsePoly pow(const SparsePoly& p, unsigned k);

inline SparsePoly operator+(const SparsePoly& p, const SparsePoly& q) { return add(p, q); }
inline SparsePoly operator-(const SparsePoly& p, const SparsePoly& q) { return sub(p, q); }
inline SparsePoly operator*(const SparsePoly& p, const SparsePoly& q) { return mul(p, q); }

/// Exact division over the integers. nullopt when d does not divide p.
/// Throws ZeroDivisor when d is zero.
std::optional<SparsePoly> divide_exact(const SparsePoly& p, const SparsePoly& d);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
DensePoly pseudo_remainder(const DensePoly& a, const DensePoly& b);

Integer content(const SparsePoly& p);
Integer content(const DensePoly& p);
/// p / content(p) with the sign chosen so the leading coefficient is positive.
SparsePoly normalize(const SparsePoly& p);
DensePoly normalize(const DensePoly& p);

/// Gcd over the rationals, returned primitive with positive leading
/// coefficient. Primitive remainder sequence. Throws InvalidArgument if both
/// inputs are zero.
SparsePoly gcd_primitive(const SparsePoly& p, const SparsePoly& q);

SparsePoly derivative(const SparsePoly& p);
Integer eval_int(const SparsePoly& p, const Integer& t);

/// x^deg(p) * p(1/x). Throws ConstantTermZero.
SparsePoly reciprocal(const SparsePoly& p);
/// reciprocal(p) == p or == -p. Throws ConstantTermZero.
bool is_reciprocal(const SparsePoly& p);

struct ExponentReduction {
  Exponent d = 1;
  SparsePoly h;  // h(x^d) == p
};

/// Writes p(x) = h(x^d) with d the gcd of the exponents of the nonconstant
/// terms. Throws ConstantInput.
ExponentReduction exponent_gcd_reduce(const SparsePoly& p);
/// h(x^d)
SparsePoly inflate(const SparsePoly& h, Exponent d);

struct SquarefreeCheck {
  bool is_squarefree = true;
  SparsePoly repeated;  // normalized gcd(p, p'); the constant 1 when squarefree
};

/// Throws ConstantInput.
SquarefreeCheck squarefree_part_check(const SparsePoly& p);

/// Canonical text: descending exponents, explicit signs, e.g. "2x^4-3x^2-4".
std::string to_string(const SparsePoly& p);
std::ostream& operator<<(std::ostream& os, const SparsePoly& p);

}  // namespace cyclofac
