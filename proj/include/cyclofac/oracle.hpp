#pragma once

// Ground truth at desk scale: complete factorization over the integers,
// resultants, and seeded instance generation.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclofac/poly.hpp"

namespace cyclofac {

struct OracleLimits {
  Exponent max_degree = 24;
  Integer max_coefficient = 1'000'000'000;
  std::uint64_t max_divisors_per_point = 10'000;
  /// Kronecker candidates enumerated per search before giving up on it.
  std::uint64_t max_candidates = 200'000;
  /// When a Kronecker search exceeds its candidate budget, finish the
  /// polynomial by Hensel lifting and exhaustive recombination instead of
  /// refusing with LimitExceeded.
  bool recombination_fallback = true;
  /// Zero means no wall-clock limit.
  std::chrono::milliseconds time_budget{0};
};

struct IrreducibleFactor {
  SparsePoly poly;  // primitive, positive leading coefficient
  unsigned multiplicity = 1;
  std::optional<Exponent> cyclotomic_index;  // set when poly is Phi_d
};

struct FactorList {
  int unit = 1;
  Integer content = 1;
  std::vector<IrreducibleFactor> factors;

  /// unit * content * prod poly^multiplicity
  SparsePoly expand() const;
  /// Product of the cyclotomic factors, with multiplicity.
  SparsePoly cyclotomic_product() const;
};

/// Irreducible factorization of f. Content and powers of x come first, then
/// cyclotomic factors by trial division, then a squarefree decomposition whose
/// parts are split by Kronecker's method (degree candidates pruned by
/// factorization degree patterns modulo small primes). The product is always
/// checked against f. Throws LimitExceeded, never guesses.
FactorList kronecker_factor(const SparsePoly& f, const OracleLimits& limits = {});

/// Single factor of multiplicity one and content one.
bool is_irreducible_oracle(const SparsePoly& f, const OracleLimits& limits = {});

/// Plain Kronecker search for a divisor of exact degree k of the primitive
/// polynomial f, evaluating around `center` instead of 0. No modular pruning;
/// used as an independent second pass. LimitExceeded when the candidate
/// budget runs out.
std::optional<SparsePoly> kronecker_divisor_search(const SparsePoly& f, Exponent k,
                                                   std::int64_t center,
                                                   const OracleLimits& limits = {});

/// Resultant by the subresultant remainder sequence.
Integer resultant(const SparsePoly& f, const SparsePoly& g);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f). Requires deg f >= 1.
Integer discriminant(const SparsePoly& f);

// ---------------------------------------------------------------------------
// Instance generation

enum class SignMode { Random, Positive };

struct InstanceParams {
  Exponent max_degree = 20;
  unsigned min_terms = 1;
  unsigned max_terms = 4;
  /// Pool for |a_0|; composites give the general (non-prime) family.
  std::vector<std::uint64_t> prime_pool;
  SignMode sign_mode = SignMode::Random;
  std::uint64_t seed = 0;
};

/// Deterministic in (params, index). Samples |a_0| = p from the pool, r
/// distinct exponents in [1, max_degree], a positive composition of p into r
/// parts, and signs. InfeasibleParams when no r in [min_terms, max_terms]
/// fits (r > p or r > max_degree).
SparsePoly gen_prime_sum_instance(const InstanceParams& params, std::uint64_t index = 0);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// ---------------------------------------------------------------------------
// End-to-end cross-check

struct VerificationRecord {
  bool passed = false;
  std::string route;  // "prime-sum" or "general"
  SparsePoly input;
  SparsePoly cyclotomic;
  SparsePoly noncyclotomic;
  FactorList factors;
  std::size_t noncyclotomic_factor_count = 0;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
};

/// Runs the hypothesis check, the closed-form decomposition (or the general
/// cyclotomic part when |a_0| is composite) and the oracle, and compares them
/// clause by clause. LimitExceeded propagates from the oracle.
VerificationRecord verify_instance(const SparsePoly& f, const OracleLimits& limits = {});

}  // namespace cyclofac
