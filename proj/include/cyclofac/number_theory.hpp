#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cyclofac {

/// Deterministic Miller-Rabin over all 64-bit inputs (witnesses: first 12 primes).
bool is_prime_u64(std::uint64_t n) noexcept;

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
/// Trial division then Pollard-Brent; exact for every 64-bit input.
std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n);

/// All positive divisors, increasing.
std::vector<std::uint64_t> divisors_u64(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
int mobius(std::uint64_t n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept;

}  // namespace cyclofac
