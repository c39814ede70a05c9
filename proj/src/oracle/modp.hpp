#pragma once

// Univariate polynomials over F_q for small odd primes q (q < 2^31, so
// products of reduced residues fit in 64 bits). Internal to the oracle.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cyclofac/poly.hpp"

namespace cyclofac::modp {

using Poly = std::vector<std::uint64_t>;  // ascending, no trailing zeros

void trim(Poly& a);
Poly reduce(const DensePoly& f, std::uint64_t q);
std::uint64_t inverse(std::uint64_t a, std::uint64_t q);

Poly add(const Poly& a, const Poly& b, std::uint64_t q);
Poly sub(const Poly& a, const Poly& b, std::uint64_t q);
Poly mul(const Poly& a, const Poly& b, std::uint64_t q);
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, std::uint64_t q);
Poly rem(const Poly& a, const Poly& b, std::uint64_t q);
Poly monic(const Poly& a, std::uint64_t q);
Poly gcd(Poly a, Poly b, std::uint64_t q);
Poly derivative(const Poly& a, std::uint64_t q);
/// base^e mod m
Poly powmod(const Poly& base, const Integer& e, const Poly& m, std::uint64_t q);

struct Bezout {
  Poly s;
  Poly t;
};
/// s a + t b = 1 for coprime a, b; deg s < deg b, deg t < deg a.
Bezout bezout(const Poly& a, const Poly& b, std::uint64_t q);

bool is_squarefree(const Poly& f, std::uint64_t q);

/// Distinct-degree factorization of a monic squarefree f: (d, product of all
/// irreducible factors of degree d) for every d that occurs.
std::vector<std::pair<unsigned, Poly>> distinct_degree(const Poly& f, std::uint64_t q);

/// Complete factorization of a monic squarefree f into monic irreducibles,
/// sorted for determinism.
std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t q, std::mt19937_64& rng);

}  // namespace cyclofac::modp
