#include <algorithm>
#include <random>
#include <set>

#include "cyclofac/error.hpp"
#include "cyclofac/oracle.hpp"

namespace cyclofac {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform in [0, n). Standard distributions differ between library
// implementations, so draw by rejection to keep instances portable.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

int draw_sign(std::mt19937_64& rng) { return (rng() >> 63) != 0 ? -1 : 1; }

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

SparsePoly gen_prime_sum_instance(const InstanceParams& params, std::uint64_t index) {
  if (params.prime_pool.empty()) throw Error(ErrorCode::InvalidArgument, "empty prime pool");
  if (params.max_degree == 0) throw Error(ErrorCode::InfeasibleParams, "max_degree must be positive");
  if (params.max_degree > kMaxExponent) throw Error(ErrorCode::ExponentOverflow, "max_degree above 2^32");
  std::mt19937_64 rng(splitmix64(splitmix64(params.seed) ^ index));

  const std::uint64_t p = params.prime_pool[draw(rng, params.prime_pool.size())];
  const std::uint64_t hi = std::min<std::uint64_t>({params.max_terms, p, params.max_degree});
  const std::uint64_t lo = std::max<std::uint64_t>(params.min_terms, 1);
  if (p == 0 || lo > hi) {
    throw Error(ErrorCode::InfeasibleParams,
                "no term count in [" + std::to_string(params.min_terms) + ", " +
                    std::to_string(params.max_terms) + "] fits p = " + std::to_string(p) +
                    " and max_degree = " + std::to_string(params.max_degree));
  }
  const std::uint64_t r = lo + draw(rng, hi - lo + 1);

  std::set<Exponent> exponents;
  while (exponents.size() < r) exponents.insert(1 + draw(rng, params.max_degree));

  std::set<std::uint64_t> cuts;
  while (cuts.size() + 1 < r) cuts.insert(1 + draw(rng, p - 1));
  std::vector<std::uint64_t> parts;
  std::uint64_t prev = 0;
  for (std::uint64_t c : cuts) {
    parts.push_back(c - prev);
    prev = c;
  }
  parts.push_back(p - prev);
  // Assign parts to exponents in a random order.
  for (std::size_t i = parts.size(); i > 1; --i) std::swap(parts[i - 1], parts[draw(rng, i)]);

  const bool random_signs = params.sign_mode == SignMode::Random;
  std::vector<Term> terms;
  std::size_t i = 0;
  for (Exponent e : exponents) {
    const int s = random_signs ? draw_sign(rng) : 1;
    terms.push_back({e, Integer(static_cast<unsigned long>(parts[i++])) * s});
  }
  const int s0 = random_signs ? draw_sign(rng) : 1;
  terms.push_back({0, Integer(static_cast<unsigned long>(p)) * s0});
  return SparsePoly::from_terms(std::move(terms));
}

}  // namespace cyclofac
