#include "modp.hpp"

#include <algorithm>

#include "cyclofac/error.hpp"
#include "cyclofac/number_theory.hpp"

namespace cyclofac::modp {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly reduce(const DensePoly& f, std::uint64_t q) {
  Poly out(f.coefficients().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = mpz_fdiv_ui(f[i].get_mpz_t(), q);
  }
  trim(out);
  return out;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t q) {
  if (a % q == 0) throw Error(ErrorCode::ZeroDivisor, "inverse of zero mod q");
  return powmod_u64(a, q - 2, q);
}

Poly add(const Poly& a, const Poly& b, std::uint64_t q) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + b[i]) % q;
  trim(out);
  return out;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t q) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + q - b[i]) % q;
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t q) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % q;
  }
  trim(out);
  return out;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, std::uint64_t q) {
  if (b.empty()) throw Error(ErrorCode::ZeroDivisor, "polynomial division by zero mod q");
  if (a.size() < b.size()) return {{}, a};
  Poly r = a;
  Poly quot(a.size() - b.size() + 1, 0);
  const std::uint64_t inv = inverse(b.back(), q);
  const std::size_t db = b.size() - 1;
  for (std::size_t i = quot.size(); i-- > 0;) {
    const std::uint64_t c = r[i + db] * inv % q;
    quot[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[i + j] = (r[i + j] + q - c * b[j] % q) % q;
  }
  trim(quot);
  trim(r);
  return {quot, r};
}

Poly rem(const Poly& a, const Poly& b, std::uint64_t q) { return divrem(a, b, q).second; }

Poly monic(const Poly& a, std::uint64_t q) {
  if (a.empty()) return a;
  const std::uint64_t inv = inverse(a.back(), q);
  Poly out = a;
  for (auto& c : out) c = c * inv % q;
  return out;
}

Poly gcd(Poly a, Poly b, std::uint64_t q) {
  while (!b.empty()) {
    Poly r = rem(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, q);
}

Poly derivative(const Poly& a, std::uint64_t q) {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * (i % q) % q;
  trim(out);
  return out;
}

Poly powmod(const Poly& base, const Integer& e, const Poly& m, std::uint64_t q) {
  Poly result{1};
  result = rem(result, m, q);
  const Poly b = rem(base, m, q);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, q), m, q);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, q), m, q);
  }
  return result;
}

Bezout bezout(const Poly& a, const Poly& b, std::uint64_t q) {
  Poly r0 = a, r1 = b;
  Poly s0{1}, s1{};
  Poly t0{}, t1{1};
  while (!r1.empty()) {
    auto [quot, r] = divrem(r0, r1, q);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(s0, mul(quot, s1, q), q);
    Poly t2 = sub(t0, mul(quot, t1, q), q);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw Error(ErrorCode::InternalInconsistency, "bezout inputs are not coprime");
  const std::uint64_t inv = inverse(r0[0], q);
  for (auto& c : s0) c = c * inv % q;
  for (auto& c : t0) c = c * inv % q;
  return {s0, t0};
}

bool is_squarefree(const Poly& f, std::uint64_t q) {
  return gcd(f, derivative(f, q), q).size() == 1;
}

std::vector<std::pair<unsigned, Poly>> distinct_degree(const Poly& f, std::uint64_t q) {
  std::vector<std::pair<unsigned, Poly>> out;
  Poly g = f;
  const Poly x{0, 1};
  Poly h = rem(x, g, q);
  const Integer qq(static_cast<unsigned long>(q));
  unsigned d = 0;
  while (g.size() - 1 >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, qq, g, q);
    Poly u = gcd(g, sub(h, x, q), q);
    if (u.size() > 1) {
      g = divrem(g, u, q).first;
      h = rem(h, g, q);
      out.emplace_back(d, std::move(u));
    }
  }
  if (g.size() > 1) out.emplace_back(static_cast<unsigned>(g.size() - 1), g);
  return out;
}

namespace {

void equal_degree(const Poly& f, unsigned d, std::uint64_t q, std::mt19937_64& rng,
                  std::vector<Poly>& out) {
  const std::size_t n = f.size() - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), q, d);
  e = (e - 1) / 2;
  for (;;) {
    Poly a(n);
    for (auto& c : a) c = rng() % q;
    trim(a);
    if (a.size() < 2) continue;
    Poly b = sub(powmod(a, e, f, q), Poly{1}, q);
    Poly u = gcd(b, f, q);
    if (u.size() > 1 && u.size() < f.size()) {
      equal_degree(u, d, q, rng, out);
      equal_degree(divrem(f, u, q).first, d, q, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t q, std::mt19937_64& rng) {
  std::vector<Poly> out;
  for (const auto& [d, part] : distinct_degree(f, q)) equal_degree(part, d, q, rng, out);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

}  // namespace cyclofac::modp
