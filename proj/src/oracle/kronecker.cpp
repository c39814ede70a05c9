#include <algorithm>
#include <chrono>
#include <numeric>

#include "cyclofac/cyclotomic.hpp"
#include "cyclofac/error.hpp"
#include "cyclofac/number_theory.hpp"
#include "cyclofac/oracle.hpp"
#include "modp.hpp"

namespace cyclofac {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds budget)
      : active_(budget.count() > 0), end_(Clock::now() + budget) {}

  void check() const {
    if (active_ && Clock::now() > end_) {
      throw Error(ErrorCode::LimitExceeded, "oracle time budget exhausted");
    }
  }

 private:
  bool active_;
  Clock::time_point end_;
};

struct Context {
  const OracleLimits& limits;
  Deadline deadline;
};

// ---------------------------------------------------------------------------
// Degree patterns modulo small primes

constexpr std::size_t kPatternPrimes = 12;

struct ModularInfo {
  std::vector<bool> allowed;  // allowed[k]: a factor of degree k is not excluded
  std::uint64_t best_prime = 0;
  std::size_t best_count = 0;
};

// Every factor over Z of degree k reduces to a product of irreducibles mod q
// whose degrees sum to k, for any q not dividing lc(f) with f squarefree mod q.
ModularInfo modular_info(const SparsePoly& f, const Context& ctx) {
  const DensePoly dense(f);
  const auto n = static_cast<std::size_t>(f.degree());
  ModularInfo info;
  info.allowed.assign(n + 1, true);
  std::size_t used = 0;
  for (std::uint64_t q = 3; used < kPatternPrimes && q < 5000; q += 2) {
    if (!is_prime_u64(q)) continue;
    if (mpz_fdiv_ui(f.leading_coefficient().get_mpz_t(), q) == 0) continue;
    const modp::Poly fq = modp::monic(modp::reduce(dense, q), q);
    if (!modp::is_squarefree(fq, q)) continue;
    ctx.deadline.check();
    ++used;
    std::vector<bool> reach(n + 1, false);
    reach[0] = true;
    std::size_t count = 0;
    for (const auto& [d, part] : modp::distinct_degree(fq, q)) {
      const std::size_t copies = (part.size() - 1) / d;
      count += copies;
      for (std::size_t c = 0; c < copies; ++c) {
        for (std::size_t s = n; s >= d; --s) {
          if (reach[s - d]) reach[s] = true;
        }
      }
    }
    if (info.best_prime == 0 || count < info.best_count) {
      info.best_prime = q;
      info.best_count = count;
    }
    bool any = false;
    for (std::size_t k = 1; k < n; ++k) {
      info.allowed[k] = info.allowed[k] && reach[k];
      any = any || info.allowed[k];
    }
    if (!any) break;
  }
  return info;
}

// ---------------------------------------------------------------------------
// Kronecker search

struct SearchResult {
  std::optional<SparsePoly> factor;
  bool exhausted = false;
};

struct Point {
  std::int64_t t = 0;
  Integer value;
  std::vector<std::int64_t> choices;  // candidate values of g(t)
};

// 0, 1, -1, 2, -2, ... around center.
std::vector<std::int64_t> point_pool(std::int64_t center, std::size_t count) {
  std::vector<std::int64_t> pts{center};
  for (std::int64_t d = 1; pts.size() < count; ++d) {
    pts.push_back(center + d);
    if (pts.size() < count) pts.push_back(center - d);
  }
  return pts;
}

class KroneckerSearch {
 public:
  KroneckerSearch(const SparsePoly& f, Exponent k, std::vector<Point> chosen,
                  std::vector<Point> filters, const Context& ctx)
      : f_(f), k_(k), chosen_(std::move(chosen)), filters_(std::move(filters)), ctx_(ctx),
        table_(k + 1, std::vector<Integer>(k + 1)) {}

  SearchResult run() {
    try {
      descend(0);
    } catch (const Exhausted&) {
      return {std::nullopt, true};
    }
    return {found_, false};
  }

 private:
  struct Exhausted {};

  // table_[j][i]: divided difference of order i over points j-i..j.
  bool descend(std::size_t j) {
    for (std::int64_t v : chosen_[j].choices) {
      if (++nodes_ > ctx_.limits.max_candidates) throw Exhausted{};
      if ((nodes_ & 0xFFF) == 0) ctx_.deadline.check();
      table_[j][0] = v;
      bool integral = true;
      for (std::size_t i = 1; i <= j && integral; ++i) {
        const Integer num = table_[j][i - 1] - table_[j - 1][i - 1];
        const Integer den = chosen_[j].t - chosen_[j - i].t;
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
          integral = false;
        } else {
          mpz_divexact(table_[j][i].get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
      }
      if (!integral) continue;
      if (j == k_) {
        if (try_candidate()) return true;
      } else if (descend(j + 1)) {
        return true;
      }
    }
    return false;
  }

  bool try_candidate() {
    const Integer& lead = table_[k_][k_];
    if (lead == 0) return false;
    if (!mpz_divisible_p(f_.leading_coefficient().get_mpz_t(), lead.get_mpz_t())) return false;
    // Newton form to monomial coefficients by Horner.
    std::vector<Integer> g{lead};
    for (std::size_t i = k_; i-- > 0;) {
      std::vector<Integer> next(g.size() + 1);
      for (std::size_t c = 0; c < g.size(); ++c) {
        next[c + 1] += g[c];
        next[c] -= g[c] * chosen_[i].t;
      }
      next[0] += table_[i][i];
      g = std::move(next);
    }
    const SparsePoly cand = SparsePoly::from_ascending(g);
    const Integer g0 = cand.constant_term();
    const Integer f0 = f_.constant_term();
    if (g0 == 0 ? f0 != 0 : !mpz_divisible_p(f0.get_mpz_t(), g0.get_mpz_t())) return false;
    for (const auto& p : filters_) {
      const Integer gv = eval_int(cand, p.t);
      if (gv == 0 || !mpz_divisible_p(p.value.get_mpz_t(), gv.get_mpz_t())) return false;
    }
    if (!divide_exact(f_, cand)) return false;
    found_ = normalize(cand);
    return true;
  }

  const SparsePoly& f_;
  const std::size_t k_;
  std::vector<Point> chosen_;
  std::vector<Point> filters_;
  const Context& ctx_;
  std::vector<std::vector<Integer>> table_;
  std::uint64_t nodes_ = 0;
  std::optional<SparsePoly> found_;
};

SearchResult kronecker_search(const SparsePoly& f, Exponent k, std::int64_t center,
                              const Context& ctx) {
  const std::size_t pool_size = 4 * (k + 1) + 8;
  std::vector<Point> usable;
  for (std::int64_t t : point_pool(center, pool_size)) {
    Integer v = eval_int(f, t);
    if (v == 0) {
      if (k == 1) return {normalize(SparsePoly::from_terms({{1, Integer(1)}, {0, Integer(-t)}})), false};
      continue;
    }
    const Integer mag = abs(v);
    if (mpz_sizeinbase(mag.get_mpz_t(), 2) > 62) continue;
    const auto divs = divisors_u64(mpz_get_ui(mag.get_mpz_t()));
    if (divs.size() > ctx.limits.max_divisors_per_point) continue;
    Point p{t, std::move(v), {}};
    for (std::uint64_t d : divs) {
      p.choices.push_back(static_cast<std::int64_t>(d));
      p.choices.push_back(-static_cast<std::int64_t>(d));
    }
    usable.push_back(std::move(p));
  }
  if (usable.size() < k + 1) return {std::nullopt, true};
  std::stable_sort(usable.begin(), usable.end(), [](const Point& a, const Point& b) {
    return a.choices.size() < b.choices.size();
  });
  std::vector<Point> chosen(usable.begin(), usable.begin() + static_cast<long>(k + 1));
  std::vector<Point> filters(usable.begin() + static_cast<long>(k + 1), usable.end());
  // g and -g are both divisors: fix the sign at the first point.
  auto& first = chosen.front().choices;
  first.erase(std::remove_if(first.begin(), first.end(), [](std::int64_t v) { return v < 0; }),
              first.end());
  return KroneckerSearch(f, k, std::move(chosen), std::move(filters), ctx).run();
}

// ---------------------------------------------------------------------------
// Hensel lifting and exhaustive recombination

using IntPoly = std::vector<Integer>;  // ascending

IntPoly lift_to_int(const modp::Poly& a) {
  IntPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<unsigned long>(a[i]);
  return out;
}

IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void reduce_mod(IntPoly& a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
}

// target monic mod q^e with target = u0 * w0 mod q; returns lifts mod q^e.
std::pair<IntPoly, IntPoly> lift_pair(const IntPoly& target, const modp::Poly& u0,
                                      const modp::Poly& w0, std::uint64_t q, unsigned e) {
  const modp::Bezout bz = modp::bezout(u0, w0, q);
  IntPoly u = lift_to_int(u0);
  IntPoly w = lift_to_int(w0);
  Integer qk = static_cast<unsigned long>(q);
  for (unsigned k = 1; k < e; ++k) {
    const Integer next = qk * static_cast<unsigned long>(q);
    IntPoly diff = target;
    const IntPoly prod = int_mul(u, w);
    diff.resize(std::max(diff.size(), prod.size()));
    for (std::size_t i = 0; i < prod.size(); ++i) diff[i] -= prod[i];
    modp::Poly c(diff.size());
    for (std::size_t i = 0; i < diff.size(); ++i) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), diff[i].get_mpz_t(), next.get_mpz_t());
      mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), qk.get_mpz_t());
      c[i] = mpz_get_ui(r.get_mpz_t()) % q;
    }
    modp::trim(c);
    const modp::Poly du = modp::rem(modp::mul(bz.t, c, q), u0, q);
    const modp::Poly dw = modp::rem(modp::mul(bz.s, c, q), w0, q);
    for (std::size_t i = 0; i < du.size(); ++i) u[i] += qk * static_cast<unsigned long>(du[i]);
    for (std::size_t i = 0; i < dw.size(); ++i) w[i] += qk * static_cast<unsigned long>(dw[i]);
    qk = next;
  }
  reduce_mod(u, qk);
  reduce_mod(w, qk);
  return {u, w};
}

std::vector<SparsePoly> recombination_factor(const SparsePoly& f, std::uint64_t q,
                                             const Context& ctx) {
  const DensePoly dense(f);
  const auto n = static_cast<unsigned>(f.degree());
  std::mt19937_64 rng(0x9E3779B97F4A7C15ULL ^ q);
  const std::vector<modp::Poly> local =
      modp::factor_squarefree(modp::monic(modp::reduce(dense, q), q), q, rng);
  if (local.size() <= 1) return {f};

  // Coefficients of (lc f / lc g) g for any divisor g are below 2^n ||f||_2.
  Integer norm2 = 0;
  for (const auto& c : dense.coefficients()) norm2 += c * c;
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
  bound += 1;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  unsigned e = 1;
  Integer modulus = static_cast<unsigned long>(q);
  while (modulus <= 2 * bound) {
    modulus *= static_cast<unsigned long>(q);
    ++e;
  }

  // Monic target lc^-1 f mod q^e, lifted one factor at a time.
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), f.leading_coefficient().get_mpz_t(), modulus.get_mpz_t());
  IntPoly target(dense.coefficients().begin(), dense.coefficients().end());
  for (auto& c : target) c *= lc_inv;
  reduce_mod(target, modulus);
  std::vector<IntPoly> lifted;
  for (std::size_t i = 0; i + 1 < local.size(); ++i) {
    ctx.deadline.check();
    modp::Poly rest{1};
    for (std::size_t j = i + 1; j < local.size(); ++j) rest = modp::mul(rest, local[j], q);
    auto [u, w] = lift_pair(target, local[i], rest, q, e);
    lifted.push_back(std::move(u));
    target = std::move(w);
  }
  lifted.push_back(std::move(target));

  const Integer half = modulus / 2;
  auto symmetric = [&](IntPoly a) {
    reduce_mod(a, modulus);
    for (auto& c : a) {
      if (c > half) c -= modulus;
    }
    return SparsePoly::from_ascending(a);
  };

  std::vector<SparsePoly> out;
  SparsePoly rest = f;
  std::vector<std::size_t> remaining(lifted.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  std::size_t size = 1;
  while (2 * size <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      ctx.deadline.check();
      IntPoly prod{rest.leading_coefficient()};
      for (std::size_t i : pick) {
        prod = int_mul(prod, lifted[remaining[i]]);
        reduce_mod(prod, modulus);
      }
      const SparsePoly cand = normalize(symmetric(std::move(prod)));
      if (auto quot = divide_exact(rest, cand)) {
        out.push_back(cand);
        rest = normalize(*quot);
        for (std::size_t i = pick.size(); i-- > 0;) {
          remaining.erase(remaining.begin() + static_cast<long>(pick[i]));
        }
        found = true;
        break;
      }
      // next combination
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == remaining.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (!rest.is_constant()) out.push_back(rest);
  return out;
}

// ---------------------------------------------------------------------------

void split_squarefree(const SparsePoly& s, Exponent min_degree, const Context& ctx,
                      std::vector<SparsePoly>& out) {
  const Exponent n = s.degree();
  if (n == 1) {
    out.push_back(s);
    return;
  }
  const ModularInfo info = modular_info(s, ctx);
  for (Exponent k = min_degree; 2 * k <= n; ++k) {
    if (!info.allowed[k]) continue;
    const SearchResult res = kronecker_search(s, k, 0, ctx);
    if (res.factor) {
      out.push_back(*res.factor);
      split_squarefree(normalize(*divide_exact(s, *res.factor)), k, ctx, out);
      return;
    }
    if (res.exhausted) {
      if (!ctx.limits.recombination_fallback || info.best_prime == 0) {
        throw Error(ErrorCode::LimitExceeded,
                    "Kronecker candidate budget exhausted at degree " + std::to_string(k) +
                        " for " + to_string(s));
      }
      for (auto& g : recombination_factor(s, info.best_prime, ctx)) out.push_back(std::move(g));
      return;
    }
  }
  out.push_back(s);
}

// Yun's algorithm over Z on a primitive polynomial; parts are primitive.
std::vector<std::pair<SparsePoly, unsigned>> squarefree_decomposition(const SparsePoly& g) {
  std::vector<std::pair<SparsePoly, unsigned>> out;
  const SparsePoly dg = derivative(g);
  const SparsePoly a0 = gcd_primitive(g, dg);
  SparsePoly b = *divide_exact(g, a0);
  SparsePoly c = *divide_exact(dg, a0);
  SparsePoly d = sub(c, derivative(b));
  for (unsigned i = 1; !b.is_constant(); ++i) {
    const SparsePoly a = gcd_primitive(b, d);
    if (!a.is_constant()) out.emplace_back(a, i);
    b = *divide_exact(b, a);
    c = *divide_exact(d, a);
    d = sub(c, derivative(b));
  }
  return out;
}

bool factor_less(const IrreducibleFactor& a, const IrreducibleFactor& b) {
  const Exponent da = a.poly.degree(), db = b.poly.degree();
  if (da != db) return da < db;
  return to_string(a.poly) < to_string(b.poly);
}

void check_limits(const SparsePoly& f, const OracleLimits& limits) {
  if (f.degree() > limits.max_degree) {
    throw Error(ErrorCode::LimitExceeded, "degree " + std::to_string(f.degree()) +
                                              " above oracle limit " +
                                              std::to_string(limits.max_degree));
  }
  for (const auto& t : f.terms()) {
    if (abs(t.coeff) > limits.max_coefficient) {
      throw Error(ErrorCode::LimitExceeded, "coefficient above oracle limit");
    }
  }
}

}  // namespace

SparsePoly FactorList::expand() const {
  SparsePoly out = SparsePoly::constant(content * unit);
  for (const auto& f : factors) out = mul(out, pow(f.poly, f.multiplicity));
  return out;
}

SparsePoly FactorList::cyclotomic_product() const {
  SparsePoly out = SparsePoly::constant(1);
  for (const auto& f : factors) {
    if (f.cyclotomic_index) out = mul(out, pow(f.poly, f.multiplicity));
  }
  return out;
}

FactorList kronecker_factor(const SparsePoly& f, const OracleLimits& limits) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "factorization of zero");
  check_limits(f, limits);
  const Context ctx{limits, Deadline(limits.time_budget)};

  FactorList out;
  out.unit = f.leading_coefficient() < 0 ? -1 : 1;
  out.content = content(f);
  SparsePoly g = normalize(f);

  const Exponent low = g.terms().back().exponent;
  if (low > 0) {
    out.factors.push_back({SparsePoly::monomial(1, 1), static_cast<unsigned>(low), std::nullopt});
    g = *divide_exact(g, SparsePoly::monomial(1, low));
  }
  if (!g.is_constant()) {
    CyclotomicSplit split = split_cyclotomic(g);
    for (const auto& c : split.factors) {
      out.factors.push_back({cyclotomic_poly(c.index), c.multiplicity, c.index});
    }
    g = std::move(split.cofactor);
  }
  if (!g.is_constant()) {
    for (const auto& [part, mult] : squarefree_decomposition(g)) {
      std::vector<SparsePoly> irreducibles;
      split_squarefree(normalize(part), 1, ctx, irreducibles);
      for (auto& u : irreducibles) out.factors.push_back({std::move(u), mult, std::nullopt});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), factor_less);

  if (out.expand() != f) {
    throw Error(ErrorCode::InternalInconsistency, "oracle factors do not multiply back to " + to_string(f));
  }
  return out;
}

bool is_irreducible_oracle(const SparsePoly& f, const OracleLimits& limits) {
  const FactorList fl = kronecker_factor(f, limits);
  return fl.content == 1 && fl.factors.size() == 1 && fl.factors.front().multiplicity == 1;
}

std::optional<SparsePoly> kronecker_divisor_search(const SparsePoly& f, Exponent k,
                                                   std::int64_t center,
                                                   const OracleLimits& limits) {
  if (f.is_constant()) throw Error(ErrorCode::ConstantInput, "divisor search on a constant");
  if (k == 0 || 2 * k > f.degree()) {
    throw Error(ErrorCode::InvalidArgument, "divisor degree must lie in [1, deg/2]");
  }
  const Context ctx{limits, Deadline(limits.time_budget)};
  const SearchResult res = kronecker_search(f, k, center, ctx);
  if (res.exhausted) {
    throw Error(ErrorCode::LimitExceeded, "Kronecker candidate budget exhausted");
  }
  return res.factor;
}

}  // namespace cyclofac
