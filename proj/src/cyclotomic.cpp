#include "cyclofac/cyclotomic.hpp"

#include <cassert>
#include <list>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "cyclofac/error.hpp"
#include "cyclofac/number_theory.hpp"
#include "cyclofac/verification.hpp"

namespace cyclofac {

SignedBinomial::SignedBinomial(Exponent degree, int sign) : degree_(degree), sign_(sign) {
  if (degree == 0) throw Error(ErrorCode::InvalidArgument, "signed binomial of degree 0");
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidArgument, "binomial sign must be +-1");
  if (degree > kMaxExponent) throw Error(ErrorCode::ExponentOverflow, "binomial degree exceeds 2^32");
}

namespace {

class PhiCache {
 public:
  explicit PhiCache(std::size_t capacity) : capacity_(capacity) {}

  std::shared_ptr<const SparsePoly> find(Exponent n) {
    std::lock_guard lock(mutex_);
    auto it = index_.find(n);
    if (it == index_.end()) return nullptr;
    order_.splice(order_.begin(), order_, it->second);
    return it->second->second;
  }

  void insert(Exponent n, std::shared_ptr<const SparsePoly> value) {
    std::lock_guard lock(mutex_);
    if (index_.count(n) != 0) return;
    order_.emplace_front(n, std::move(value));
    index_[n] = order_.begin();
    if (order_.size() > capacity_) {
      index_.erase(order_.back().first);
      order_.pop_back();
    }
  }

 private:
  using Entry = std::pair<Exponent, std::shared_ptr<const SparsePoly>>;
  std::size_t capacity_;
  std::mutex mutex_;
  std::list<Entry> order_;
  std::unordered_map<Exponent, std::list<Entry>::iterator> index_;
};

PhiCache& phi_cache() {
  static PhiCache cache(4096);
  return cache;
}

// Phi_n for squarefree n > 1 as prod_{d|n} (1 - x^d)^mu(n/d), truncated at
// degree phi(n). Products and quotients of power series commute, so the
// factors can be applied in any order.
SparsePoly squarefree_cyclotomic(Exponent n) {
  const auto top = static_cast<std::size_t>(euler_phi(n));
  std::vector<Integer> a(top + 1);
  a[0] = 1;
  for (Exponent d : divisors_u64(n)) {
    const int mu = mobius(n / d);
    if (mu == 0 || d > top) continue;
    if (mu == 1) {
      for (std::size_t i = top; i >= d; --i) a[i] -= a[i - d];
    } else {
      for (std::size_t i = d; i <= top; ++i) a[i] += a[i - d];
    }
  }
  return SparsePoly::from_ascending(a);
}

SparsePoly compute_cyclotomic(Exponent n) {
  if (n == 1) return SparsePoly::binomial(1, -1);
  Exponent radical = 1;
  for (const auto& [p, k] : factorize_u64(n)) radical *= p;
  return inflate(squarefree_cyclotomic(radical), n / radical);
}

}  // namespace

SparsePoly cyclotomic_poly(Exponent n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic index 0");
  if (n > kCyclotomicIndexBound) {
    throw Error(ErrorCode::BoundExceeded,
                "cyclotomic index " + std::to_string(n) + " above " +
                    std::to_string(kCyclotomicIndexBound));
  }
  if (auto hit = phi_cache().find(n)) return *hit;
  auto value = std::make_shared<const SparsePoly>(compute_cyclotomic(n));
  phi_cache().insert(n, value);
  return *value;
}

BinomialGcd binomial_gcd(const SignedBinomial& a, const SignedBinomial& b) {
  const Exponent n = a.degree();
  const Exponent m = b.degree();
  if (a.sign() == -1 && b.sign() == -1) return {SignedBinomial(std::gcd(n, m), -1)};
  if (a.sign() == 1 && b.sign() == 1) {
    if (even_part(n) == even_part(m)) return {SignedBinomial(std::gcd(n, m), 1)};
    return {};
  }
  // x^plus + 1 against x^minus - 1
  const Exponent plus = a.sign() == 1 ? n : m;
  const Exponent minus = a.sign() == 1 ? m : n;
  if (even_part(minus) >= 2 * even_part(plus)) {
    return {SignedBinomial(std::gcd(plus, minus / 2), 1)};
  }
  return {};
}

BinomialGcd family_gcd_closed(std::span<const SignedBinomial> binomials) {
  if (binomials.empty()) throw Error(ErrorCode::InvalidArgument, "family gcd of an empty list");
  BinomialGcd acc{binomials.front()};
  for (const auto& b : binomials.subspan(1)) {
    if (acc.is_one()) break;
    acc = binomial_gcd(*acc.binomial, b);
  }
  return acc;
}

SparsePoly family_gcd(std::span<const SignedBinomial> binomials) {
  const SparsePoly closed = family_gcd_closed(binomials).to_poly();
  if (verification_enabled()) {
    bool small = true;
    for (const auto& b : binomials) small = small && b.degree() <= kVerifyDegreeLimit;
    if (small) {
      SparsePoly generic = normalize(binomials.front().to_poly());
      for (const auto& b : binomials.subspan(1)) generic = gcd_primitive(generic, b.to_poly());
      if (generic != closed) {
        throw Error(ErrorCode::InternalInconsistency,
                    "closed-form family gcd " + to_string(closed) + " disagrees with " +
                        to_string(generic));
      }
    }
  }
  return closed;
}

CyclotomicSplit split_cyclotomic(const SparsePoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "cyclotomic split of zero");
  if (p.constant_term() == 0) {
    throw Error(ErrorCode::ConstantTermZero, "cyclotomic split needs p(0) != 0");
  }
  CyclotomicSplit out{{}, p};
  auto strip = [&out](Exponent d, const SparsePoly& phi) {
    unsigned k = 0;
    while (auto q = divide_exact(out.cofactor, phi)) {
      out.cofactor = std::move(*q);
      ++k;
    }
    if (k > 0) out.factors.push_back({d, k});
  };

  // Phi_1 and Phi_2 through their roots.
  {
    unsigned k = 0;
    while (!out.cofactor.is_constant() && eval_int(out.cofactor, 1) == 0) {
      out.cofactor = *divide_exact(out.cofactor, cyclotomic_poly(1));
      ++k;
    }
    if (k > 0) out.factors.push_back({1, k});
    k = 0;
    while (!out.cofactor.is_constant() && eval_int(out.cofactor, -1) == 0) {
      out.cofactor = *divide_exact(out.cofactor, cyclotomic_poly(2));
      ++k;
    }
    if (k > 0) out.factors.push_back({2, k});
  }

  // Cofactor values at 2 and 3: Phi_d(t) must divide them.
  for (Exponent d = 3; !out.cofactor.is_constant(); ++d) {
    const Exponent deg = out.cofactor.degree();
    if (d > cyclotomic_search_bound(deg)) break;
    const Exponent phi = euler_phi(d);
    assert(2 * phi * phi >= d);
    if (phi > deg) continue;
    const SparsePoly phi_d = cyclotomic_poly(d);
    const Integer v2 = eval_int(out.cofactor, 2);
    const Integer w2 = eval_int(phi_d, 2);
    if (!mpz_divisible_p(v2.get_mpz_t(), w2.get_mpz_t())) continue;
    const Integer v3 = eval_int(out.cofactor, 3);
    const Integer w3 = eval_int(phi_d, 3);
    if (!mpz_divisible_p(v3.get_mpz_t(), w3.get_mpz_t())) continue;
    strip(d, phi_d);
  }
  return out;
}

bool is_cyclotomic_product(const SparsePoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "cyclotomic test of zero");
  if (abs(p.leading_coefficient()) != 1 || abs(p.constant_term()) != 1) return false;
  const CyclotomicSplit split = split_cyclotomic(p);
  return split.cofactor.is_constant() && abs(split.cofactor.constant_term()) == 1;
}

SparsePoly cyclotomic_part(const SparsePoly& p) {
  return expand_cyclotomic(split_cyclotomic(p).factors);
}

SparsePoly expand_cyclotomic(std::span<const CyclotomicFactor> factors) {
  SparsePoly out = SparsePoly::constant(1);
  for (const auto& f : factors) out = mul(out, pow(cyclotomic_poly(f.index), f.multiplicity));
  return out;
}

}  // namespace cyclofac
