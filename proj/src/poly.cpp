#include "cyclofac/poly.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "cyclofac/error.hpp"

namespace cyclofac {

namespace {

// Above this degree exact division runs on the sparse long-division path.
constexpr Exponent kDenseDivisionLimit = 4096;

std::atomic<long> g_dense_high_water{-1};

void note_dense_degree(long degree) noexcept {
  long seen = g_dense_high_water.load(std::memory_order_relaxed);
  while (degree > seen &&
         !g_dense_high_water.compare_exchange_weak(seen, degree, std::memory_order_relaxed)) {
  }
}

void check_exponent(Exponent e) {
  if (e > kMaxExponent) {
    throw Error(ErrorCode::ExponentOverflow,
                "exponent " + std::to_string(e) + " exceeds 2^32");
  }
}

Integer power(const Integer& base, Exponent e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

std::optional<DensePoly> divide_dense(const DensePoly& p, const DensePoly& d) {
  if (p.degree() < d.degree()) {
    if (p.is_zero()) return DensePoly{};
    return std::nullopt;
  }
  std::vector<Integer> rem = p.coefficients();
  const auto dd = static_cast<std::size_t>(d.degree());
  const Integer& lc = d.leading_coefficient();
  std::vector<Integer> quot(rem.size() - dd);
  for (std::size_t i = quot.size(); i-- > 0;) {
    Integer& top = rem[i + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (std::size_t j = 0; j <= dd; ++j) {
      if (d[j] != 0) rem[i + j] -= q * d[j];
    }
    quot[i] = std::move(q);
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (rem[i] != 0) return std::nullopt;
  }
  return DensePoly(std::move(quot));
}

std::optional<SparsePoly> divide_sparse(const SparsePoly& p, const SparsePoly& d) {
  std::map<Exponent, Integer, std::greater<>> rem;
  for (const auto& t : p.terms()) rem.emplace(t.exponent, t.coeff);
  const Exponent dd = d.degree();
  const Integer& lc = d.leading_coefficient();
  const auto dterms = d.terms();
  std::vector<Term> quot;
  while (!rem.empty() && rem.begin()->first >= dd) {
    const Exponent top_e = rem.begin()->first;
    const Integer& top = rem.begin()->second;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    const Exponent shift = top_e - dd;
    for (const auto& t : dterms) {
      const Exponent e = shift + t.exponent;
      auto [it, inserted] = rem.try_emplace(e, 0);
      it->second -= q * t.coeff;
      if (it->second == 0) rem.erase(it);
    }
    quot.push_back({shift, std::move(q)});
  }
  if (!rem.empty()) return std::nullopt;
  return SparsePoly::from_terms(std::move(quot));
}

}  // namespace

// ---------------------------------------------------------------------------
// SparsePoly

SparsePoly::SparsePoly(std::initializer_list<std::pair<Exponent, long>> terms) {
  std::vector<Term> v;
  v.reserve(terms.size());
  for (const auto& [e, c] : terms) v.push_back({e, Integer(c)});
  *this = from_terms(std::move(v));
}

SparsePoly SparsePoly::from_terms(std::vector<Term> terms) {
  for (const auto& t : terms) check_exponent(t.exponent);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exponent == t.exponent) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return SparsePoly(std::move(out));
}

SparsePoly SparsePoly::constant(Integer c) { return monomial(std::move(c), 0); }

SparsePoly SparsePoly::monomial(Integer c, Exponent e) {
  check_exponent(e);
  if (c == 0) return {};
  return SparsePoly(std::vector<Term>{{e, std::move(c)}});
}

SparsePoly SparsePoly::binomial(Exponent k, int s) {
  return from_terms({{k, Integer(1)}, {0, Integer(s)}});
}

SparsePoly SparsePoly::from_ascending(const std::vector<Integer>& coefficients) {
  std::vector<Term> out;
  for (std::size_t i = coefficients.size(); i-- > 0;) {
    if (coefficients[i] != 0) out.push_back({i, coefficients[i]});
  }
  return SparsePoly(std::move(out));
}

Exponent SparsePoly::degree() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "degree of the zero polynomial");
  return terms_.front().exponent;
}

const Integer& SparsePoly::leading_coefficient() const {
  if (terms_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "leading coefficient of the zero polynomial");
  }
  return terms_.front().coeff;
}

Integer SparsePoly::constant_term() const { return coefficient(0); }

Integer SparsePoly::coefficient(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, Exponent x) { return t.exponent > x; });
  if (it != terms_.end() && it->exponent == e) return it->coeff;
  return 0;
}

SparsePoly SparsePoly::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return SparsePoly(std::move(out));
}

// ---------------------------------------------------------------------------
// DensePoly

DensePoly::DensePoly(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) {
  trim();
  note_dense_degree(degree());
}

DensePoly::DensePoly(const SparsePoly& p) {
  if (!p.is_zero()) {
    coeffs_.resize(p.degree() + 1);
    for (const auto& t : p.terms()) coeffs_[t.exponent] = t.coeff;
  }
  note_dense_degree(degree());
}

void DensePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long dense_degree_high_water() noexcept { return g_dense_high_water.load(); }
void reset_dense_degree_high_water() noexcept { g_dense_high_water.store(-1); }

// ---------------------------------------------------------------------------
// Ring operations

SparsePoly add(const SparsePoly& p, const SparsePoly& q) {
  std::vector<Term> out;
  out.reserve(p.term_count() + q.term_count());
  auto a = p.terms().begin(), ae = p.terms().end();
  auto b = q.terms().begin(), be = q.terms().end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->exponent > b->exponent)) {
      out.push_back(*a++);
    } else if (a == ae || b->exponent > a->exponent) {
      out.push_back(*b++);
    } else {
      Integer c = a->coeff + b->coeff;
      if (c != 0) out.push_back({a->exponent, std::move(c)});
      ++a;
      ++b;
    }
  }
  return SparsePoly::from_terms(std::move(out));
}

SparsePoly sub(const SparsePoly& p, const SparsePoly& q) { return add(p, -q); }

SparsePoly mul(const SparsePoly& p, const SparsePoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::map<Exponent, Integer, std::greater<>> acc;
  for (const auto& a : p.terms()) {
    for (const auto& b : q.terms()) {
      acc[a.exponent + b.exponent] += a.coeff * b.coeff;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != 0) out.push_back({e, std::move(c)});
  }
  return SparsePoly::from_terms(std::move(out));
}

SparsePoly scale(const SparsePoly& p, const Integer& c) {
  if (c == 0) return {};
  std::vector<Term> out(p.terms().begin(), p.terms().end());
  for (auto& t : out) t.coeff *= c;
  return SparsePoly::from_terms(std::move(out));
}

SparsePoly pow(const SparsePoly& p, unsigned k) {
  SparsePoly result = SparsePoly::constant(1);
  SparsePoly base = p;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    k >>= 1U;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

std::optional<SparsePoly> divide_exact(const SparsePoly& p, const SparsePoly& d) {
  if (d.is_zero()) throw Error(ErrorCode::ZeroDivisor, "division by the zero polynomial");
  if (p.is_zero()) return SparsePoly{};
  if (d.is_constant()) {
    const Integer& c = d.leading_coefficient();
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
      Integer q;
      mpz_divexact(q.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
      out.push_back({t.exponent, std::move(q)});
    }
    return SparsePoly::from_terms(std::move(out));
  }
  if (p.degree() < d.degree()) return std::nullopt;
  if (p.degree() <= kDenseDivisionLimit) {
    auto q = divide_dense(DensePoly(p), DensePoly(d));
    if (!q) return std::nullopt;
    return q->to_sparse();
  }
  return divide_sparse(p, d);
}

DensePoly pseudo_remainder(const DensePoly& a, const DensePoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDivisor, "pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r = a.coefficients();
  const auto db = static_cast<std::size_t>(b.degree());
  const Integer& lc = b.leading_coefficient();
  for (std::size_t top = r.size(); top-- > db;) {
    const Integer lead = r[top];
    // r <- lc*r - lead*x^(top-db)*b
    for (auto& c : r) c *= lc;
    if (lead != 0) {
      for (std::size_t j = 0; j <= db; ++j) r[top - db + j] -= lead * b[j];
    }
    r.pop_back();
  }
  return DensePoly(std::move(r));
}

Integer content(const SparsePoly& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Integer content(const DensePoly& p) {
  Integer g = 0;
  for (const auto& c : p.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

SparsePoly normalize(const SparsePoly& p) {
  if (p.is_zero()) return p;
  Integer c = content(p);
  if (p.leading_coefficient() < 0) c = -c;
  return *divide_exact(p, SparsePoly::constant(c));
}

DensePoly normalize(const DensePoly& p) {
  if (p.is_zero()) return p;
  Integer c = content(p);
  if (p.leading_coefficient() < 0) c = -c;
  std::vector<Integer> out = p.coefficients();
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return DensePoly(std::move(out));
}

SparsePoly gcd_primitive(const SparsePoly& p, const SparsePoly& q) {
  if (p.is_zero() && q.is_zero()) {
    throw Error(ErrorCode::InvalidArgument, "gcd of two zero polynomials");
  }
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  DensePoly a = normalize(DensePoly(p));
  DensePoly b = normalize(DensePoly(q));
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    DensePoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = normalize(r);
  }
  if (a.degree() == 0) return SparsePoly::constant(1);
  return normalize(a).to_sparse();
}

SparsePoly derivative(const SparsePoly& p) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.exponent == 0) continue;
    out.push_back({t.exponent - 1, t.coeff * Integer(static_cast<unsigned long>(t.exponent))});
  }
  return SparsePoly::from_terms(std::move(out));
}

Integer eval_int(const SparsePoly& p, const Integer& t) {
  if (p.is_zero()) return 0;
  if (t == 0) return p.constant_term();
  if (t == 1 || t == -1) {
    Integer sum = 0;
    for (const auto& term : p.terms()) {
      if (t == -1 && (term.exponent & 1U)) {
        sum -= term.coeff;
      } else {
        sum += term.coeff;
      }
    }
    return sum;
  }
  // Horner over the gaps between consecutive exponents.
  Integer acc = 0;
  Exponent prev = p.degree();
  for (const auto& term : p.terms()) {
    if (prev != term.exponent) acc *= power(t, prev - term.exponent);
    acc += term.coeff;
    prev = term.exponent;
  }
  if (prev > 0) acc *= power(t, prev);
  return acc;
}

SparsePoly reciprocal(const SparsePoly& p) {
  if (p.is_zero() || p.constant_term() == 0) {
    throw Error(ErrorCode::ConstantTermZero, "reciprocal needs a nonzero constant term");
  }
  const Exponent n = p.degree();
  std::vector<Term> out;
  out.reserve(p.term_count());
  for (const auto& t : p.terms()) out.push_back({n - t.exponent, t.coeff});
  return SparsePoly::from_terms(std::move(out));
}

bool is_reciprocal(const SparsePoly& p) {
  const SparsePoly r = reciprocal(p);
  return r == p || r == -p;
}

ExponentReduction exponent_gcd_reduce(const SparsePoly& p) {
  if (p.is_constant()) {
    throw Error(ErrorCode::ConstantInput, "exponent reduction of a constant");
  }
  Exponent d = 0;
  for (const auto& t : p.terms()) {
    if (t.exponent != 0) d = std::gcd(d, t.exponent);
  }
  std::vector<Term> out;
  out.reserve(p.term_count());
  for (const auto& t : p.terms()) out.push_back({t.exponent / d, t.coeff});
  return {d, SparsePoly::from_terms(std::move(out))};
}

SparsePoly inflate(const SparsePoly& h, Exponent d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "inflate by zero");
  std::vector<Term> out;
  out.reserve(h.term_count());
  for (const auto& t : h.terms()) {
    if (t.exponent != 0 && t.exponent > kMaxExponent / d) {
      throw Error(ErrorCode::ExponentOverflow, "inflated exponent exceeds 2^32");
    }
    out.push_back({t.exponent * d, t.coeff});
  }
  return SparsePoly::from_terms(std::move(out));
}

SquarefreeCheck squarefree_part_check(const SparsePoly& p) {
  if (p.is_constant()) {
    throw Error(ErrorCode::ConstantInput, "squarefree check of a constant");
  }
  SparsePoly g = gcd_primitive(p, derivative(p));
  const bool squarefree = g.is_constant();
  return {squarefree, squarefree ? SparsePoly::constant(1) : std::move(g)};
}

std::string to_string(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    if (negative) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    const Integer mag = abs(t.coeff);
    if (t.exponent == 0 || mag != 1) os << mag.get_str();
    if (t.exponent >= 1) os << 'x';
    if (t.exponent > 1) os << '^' << t.exponent;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& p) { return os << to_string(p); }

}  // namespace cyclofac
