#include "cyclofac/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <thread>

#include "cyclofac/classifier.hpp"
#include "cyclofac/cyclotomic.hpp"
#include "cyclofac/error.hpp"
#include "cyclofac/number_theory.hpp"
#include "cyclofac/oracle.hpp"
#include "cyclofac/parse.hpp"
#include "cyclofac/verification.hpp"

namespace cyclofac {

namespace {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;
// gcd(f, f') densifies; keep the generic separability path bounded.
constexpr Exponent kGenericSeparableDegree = 4096;

struct Options {
  bool fast = false;
  bool check = false;
  bool json = false;
  std::string output;
  std::uint64_t seed = 0;
  std::string terms;
  unsigned jobs = 0;

  std::string poly;

  std::string disc_n, disc_m, disc_a, disc_b;

  std::string family;
  std::string n_range, m_range, p_range;
  std::uint64_t count = 100;
  Exponent max_degree = 20;
  unsigned min_terms = 1;
  unsigned max_terms = 4;
};

// ---------------------------------------------------------------------------
// Output

std::string render_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_array()) {
    if (v.empty()) return "none";
    std::string out;
    for (const auto& x : v) {
      if (!out.empty()) out += ", ";
      out += render_text(x);
    }
    return out;
  }
  return v.dump();
}

class Report {
 public:
  explicit Report(std::string command) { add("command", std::move(command)); }

  void add(const std::string& key, json value) { fields_.emplace_back(key, std::move(value)); }
  void note(std::string text) { notes_.push_back(std::move(text)); }

  void emit(std::ostream& os, bool as_json, double elapsed_ms) const {
    if (as_json) {
      json rec = json::object();
      for (const auto& [k, v] : fields_) rec[k] = v;
      rec["notes"] = notes_;
      rec["schema_version"] = kSchemaVersion;
      rec["timings"] = {{"total_ms", elapsed_ms}};
      os << rec.dump() << '\n';
      return;
    }
    for (const auto& [k, v] : fields_) {
      if (k == "command") continue;
      os << k << ": " << render_text(v) << '\n';
    }
    for (const auto& n : notes_) os << "note: " << n << '\n';
  }

 private:
  std::vector<std::pair<std::string, json>> fields_;
  std::vector<std::string> notes_;
};

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::out | std::ios::trunc | std::ios::binary);
      if (!file_) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }
  void close(const std::string& path) {
    if (file_.is_open()) {
      file_.close();
      if (!file_) throw Error(ErrorCode::IoError, "failed writing '" + path + "'");
    }
  }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

// ---------------------------------------------------------------------------
// Helpers

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::InternalInconsistency ? kExitInternal : kExitData;
}

SparsePoly input_poly(const Options& o) {
  if (!o.terms.empty() && !o.poly.empty()) {
    throw Error(ErrorCode::InvalidArgument, "give either a polynomial or --terms, not both");
  }
  if (!o.terms.empty()) return parse_terms(o.terms);
  if (o.poly.empty()) throw Error(ErrorCode::InvalidArgument, "missing polynomial (positional or --terms)");
  return parse_poly(o.poly);
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19) {
    throw Error(ErrorCode::BadRange, "bad " + what + " '" + s + "'");
  }
  return std::stoull(s);
}

Integer parse_integer(const std::string& s, const std::string& what) {
  const std::size_t from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == from || s.find_first_not_of("0123456789", from) != std::string::npos) {
    throw Error(ErrorCode::InvalidArgument, "bad " + what + " '" + s + "'");
  }
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

// "2..6", "2,3,5", "1..3,7"; an item with lo > hi contributes nothing.
std::vector<std::uint64_t> parse_range(const std::string& text, const std::string& what) {
  constexpr std::uint64_t kMaxItems = 10'000'000;
  std::set<std::uint64_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    const std::size_t dots = item.find("..");
    const std::uint64_t lo = parse_u64(dots == std::string::npos ? item : item.substr(0, dots), what);
    const std::uint64_t hi = dots == std::string::npos ? lo : parse_u64(item.substr(dots + 2), what);
    if (hi >= lo && hi - lo >= kMaxItems) throw Error(ErrorCode::BadRange, what + " range too large");
    for (std::uint64_t v = lo; v <= hi && v >= lo; ++v) {
      values.insert(v);
      if (v == UINT64_MAX) break;
    }
    if (values.size() > kMaxItems) throw Error(ErrorCode::BadRange, what + " range too large");
    pos = comma + 1;
  }
  return {values.begin(), values.end()};
}

std::vector<std::uint64_t> primes_in(const std::vector<std::uint64_t>& values) {
  std::vector<std::uint64_t> out;
  for (auto v : values) {
    if (is_prime_u64(v)) out.push_back(v);
  }
  return out;
}

template <class Fn>
auto parallel_map(std::size_t count, unsigned jobs, Fn fn) {
  using R = decltype(fn(std::size_t{}));
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned n = jobs != 0 ? jobs : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, count));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<R> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

int sign_of(const Integer& x) { return x < 0 ? -1 : 1; }

std::string sign_text(int s) { return s > 0 ? "+1" : "-1"; }

json to_json(const Integer& x) { return x.get_str(); }

json binomial_list(const std::vector<SignedBinomial>& bs) {
  json out = json::array();
  for (const auto& b : bs) out.push_back(to_string(b.to_poly()));
  return out;
}

std::vector<std::uint64_t> cyclotomic_indices(const BinomialGcd& g) {
  if (g.is_one()) return {};
  const Exponent k = g.binomial->degree();
  if (g.binomial->sign() < 0) return divisors_u64(k);
  std::vector<std::uint64_t> out;
  for (auto d : divisors_u64(2 * k)) {
    if (k % d != 0) out.push_back(d);
  }
  return out;
}

json index_list(const std::vector<std::uint64_t>& idx) {
  json out = json::array();
  for (auto d : idx) out.push_back("Phi_" + std::to_string(d));
  return out;
}

// Runs the oracle cross-check; oracle limits surface as a clear refusal.
VerificationRecord oracle_verify(const SparsePoly& f) {
  try {
    return verify_instance(f);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::LimitExceeded) throw;
    throw Error(ErrorCode::LimitExceeded,
                "--check runs the factorization oracle, which accepts degree <= 24 and "
                "coefficients up to 1e9 in absolute value; this input is outside that range (" +
                    std::string(e.what()) + ")");
  }
}

void attach_check(Report& rep, const VerificationRecord& rec) {
  json factors = json::array();
  for (const auto& g : rec.factors.factors) {
    std::string s = "(" + to_string(g.poly) + ")";
    if (g.multiplicity > 1) s += "^" + std::to_string(g.multiplicity);
    factors.push_back(s);
  }
  rep.add("oracle_factors", factors);
  rep.add("check", rec.passed ? "passed" : "FAILED");
  for (const auto& n : rec.notes) rep.note("oracle: " + n);
  if (!rec.passed) {
    std::string msg = "cross-check failed for " + to_string(rec.input) + ":";
    for (const auto& v : rec.violations) msg += " [" + v + "]";
    rep.add("violations", rec.violations);
    throw Error(ErrorCode::InternalInconsistency, msg);
  }
}

void add_hypothesis(Report& rep, const HypothesisReport& h) {
  rep.add("a0", to_json(h.constant_term));
  rep.add("tail_sum", to_json(h.tail_sum));
  rep.add("sum_condition", h.sum_condition_holds);
  rep.add("a0_prime", h.a0_is_prime);
}

// ---------------------------------------------------------------------------
// Commands

int cmd_classify(const Options& o, Report& rep) {
  const SparsePoly f = input_poly(o);
  rep.add("input", to_string(f));
  HypothesisReport h;
  try {
    h = hypothesis_check(f);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ConstantTermZero && e.code() != ErrorCode::A0TooLarge) throw;
    rep.add("hypothesis", e.code() == ErrorCode::ConstantTermZero ? "f(0) = 0" : "|a_0| >= 2^64");
    rep.add("verdict", "hypothesis not met");
    return 2;
  }
  add_hypothesis(rep, h);

  if (!h.sum_condition_holds) {
    rep.add("route", "none");
    if (panitopol_stefanescu(f) == PSVerdict::Irreducible) {
      rep.note("|a_0| dominates the other coefficients; the Panitopol-Stefanescu criterion proves irreducibility");
    }
    if (o.check) {
      try {
        rep.add("oracle_verdict", is_irreducible_oracle(f) ? "irreducible" : "reducible");
      } catch (const Error& e) {
        if (e.code() != ErrorCode::LimitExceeded) throw;
        rep.note("oracle skipped: input outside its limits");
      }
    }
    rep.add("verdict", "hypothesis not met");
    return 2;
  }

  if (o.fast && h.prime_sum()) {
    const bool positive = std::all_of(f.terms().begin(), f.terms().end(),
                                      [](const Term& t) { return t.coeff > 0; });
    std::optional<bool> irreducible;
    if (positive) {
      irreducible = corollary_even_part(f);
      rep.add("route", "even-part corollary");
    } else if (auto v = corollary_consecutive(f)) {
      irreducible = *v == Verdict::Irreducible;
      rep.add("route", "consecutive-exponent corollary");
    }
    if (irreducible) {
      rep.add("verdict", *irreducible ? "irreducible" : "reducible");
      if (o.check) attach_check(rep, oracle_verify(f));
      return *irreducible ? 0 : 1;
    }
    rep.note("no corollary applies; using the decomposition");
  }

  int code = 0;
  if (h.prime_sum()) {
    const Decomposition d = decompose(f);
    rep.add("route", "prime-sum decomposition");
    rep.add("certificate", binomial_list(d.certificate));
    rep.add("f_c", to_string(d.cyclotomic));
    rep.add("f_n", to_string(d.noncyclotomic));
    rep.add("verdict", d.irreducible ? "irreducible" : "reducible");
    code = d.irreducible ? 0 : 1;
  } else {
    const SparsePoly fc = general_cyclotomic_part(f);
    rep.add("route", "general cyclotomic part");
    rep.add("certificate", binomial_list(h.binomials()));
    rep.add("f_c", to_string(fc));
    if (fc.is_constant()) {
      rep.add("verdict", "undecided");
      rep.note("|a_0| is composite and f has no cyclotomic factor; irreducibility is not decided here");
      code = 2;
    } else {
      rep.add("f_n", to_string(*divide_exact(f, fc)));
      rep.add("verdict", "reducible");
      code = 1;
    }
  }
  if (o.check) attach_check(rep, oracle_verify(f));
  return code;
}

int cmd_cyclofactor(const Options& o, Report& rep) {
  const SparsePoly f = input_poly(o);
  rep.add("input", to_string(f));
  HypothesisReport h;
  try {
    h = hypothesis_check(f);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ConstantTermZero) throw;
    rep.add("verdict", "hypothesis not met");
    return 2;
  }
  add_hypothesis(rep, h);
  if (!h.sum_condition_holds) {
    rep.add("verdict", "hypothesis not met");
    return 2;
  }
  const auto bs = h.binomials();
  const BinomialGcd g = family_gcd_closed(bs);
  const SparsePoly fc = family_gcd(bs);
  rep.add("route", h.a0_is_prime ? "prime-sum" : "general");
  rep.add("certificate", binomial_list(bs));
  rep.add("f_c", to_string(fc));
  rep.add("cyclotomic_factors", index_list(cyclotomic_indices(g)));
  rep.add("cofactor", to_string(*divide_exact(f, fc)));
  if (o.check) attach_check(rep, oracle_verify(f));
  return 0;
}

int cmd_disc(const Options& o, Report& rep) {
  const Exponent n = parse_u64(o.disc_n, "n");
  const Exponent m = parse_u64(o.disc_m, "m");
  const Integer a = parse_integer(o.disc_a, "a");
  const Integer b = parse_integer(o.disc_b, "b");
  if (n > kMaxExponent) throw Error(ErrorCode::ExponentOverflow, "n above 2^32");
  rep.add("n", n);
  rep.add("m", m);
  rep.add("a", to_json(a));
  rep.add("b", to_json(b));
  const Integer d = trinomial_discriminant(n, m, a, b);
  rep.add("input", to_string(SparsePoly::from_terms({{n, Integer(1)}, {m, a}, {0, b}})));
  rep.add("discriminant", to_json(d));
  if (o.check) {
    if (n > kVerifyDegreeLimit) {
      throw Error(ErrorCode::LimitExceeded, "--check computes Res(f, f') densely; n is limited to " +
                                                std::to_string(kVerifyDegreeLimit));
    }
    const Integer r = discriminant(SparsePoly::from_terms({{n, Integer(1)}, {m, a}, {0, b}}));
    rep.add("resultant_discriminant", to_json(r));
    rep.add("agree", r == d);
    if (r != d) throw Error(ErrorCode::InternalInconsistency, "closed-form and resultant discriminants differ");
  }
  return 0;
}

int cmd_separable(const Options& o, Report& rep) {
  const SparsePoly input = input_poly(o);
  rep.add("input", to_string(input));
  if (input.is_constant()) throw Error(ErrorCode::ConstantInput, "polynomial is constant");
  const SparsePoly f = input.leading_coefficient() < 0 ? -input : input;
  const auto t = f.terms();
  const bool has_constant = t.back().exponent == 0;

  SeparabilityReport sr;
  std::string path;
  bool decided = false;
  if (t.size() == 3 && has_constant) {
    const Integer p = abs(t[2].coeff);
    const Integer b = abs(t[1].coeff);
    if (mpz_sizeinbase(p.get_mpz_t(), 2) <= 64 && is_prime_u64(mpz_get_ui(p.get_mpz_t())) && b <= p) {
      sr = trinomial_separable(t[0].coeff, b, p, t[0].exponent, t[1].exponent, sign_of(t[1].coeff),
                               sign_of(t[2].coeff));
      path = "trinomial theorem (|f(0)| prime, middle coefficient at most |f(0)|)";
      decided = true;
    }
  } else if (t.size() == 4 && has_constant &&
             std::all_of(t.begin(), t.end(), [](const Term& x) { return abs(x.coeff) == 1; })) {
    sr = quadrinomial_separable(t[0].exponent, t[1].exponent, t[2].exponent, sign_of(t[1].coeff),
                                sign_of(t[2].coeff), sign_of(t[3].coeff));
    path = sr.by_theorem ? "quadrinomial theorem (f(1) != 0 and f(-1) != 0)" : "gcd(f, f')";
    decided = true;
  }
  if (!decided) {
    if (f.degree() > kGenericSeparableDegree) {
      throw Error(ErrorCode::LimitExceeded, "no closed form applies and gcd(f, f') would need degree " +
                                                std::to_string(f.degree()) + " dense arithmetic");
    }
    SquarefreeCheck sq = squarefree_part_check(f);
    sr = {sq.is_squarefree, false, std::move(sq.repeated)};
    path = "gcd(f, f')";
  }
  rep.add("separable", sr.separable);
  rep.add("path", path);
  rep.add("repeated_factor", to_string(sr.repeated_factor));
  return sr.separable ? 0 : 1;
}

// --- sweep ------------------------------------------------------------------

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_table(std::ostream& os, const Table& t, bool as_json) {
  if (as_json) {
    for (const auto& row : t.rows) {
      json rec = json::object();
      for (std::size_t i = 0; i < row.size(); ++i) rec[t.header[i]] = row[i];
      rec["schema_version"] = kSchemaVersion;
      os << rec.dump() << '\n';
    }
    return;
  }
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
}

std::string check_cell(bool check, bool ok) { return check ? (ok ? "yes" : "no") : "-"; }

Table sweep_trinomial(const Options& o) {
  struct Item {
    std::uint64_t a, b, p;
    Exponent n, m;
    int e1, e2;
  };
  const auto ns = parse_range(o.n_range.empty() ? "2..6" : o.n_range, "n");
  const auto ps = primes_in(parse_range(o.p_range.empty() ? "2..3" : o.p_range, "p"));
  std::optional<std::vector<std::uint64_t>> ms;
  if (!o.m_range.empty()) ms = parse_range(o.m_range, "m");
  std::vector<Item> items;
  for (Exponent n : ns) {
    if (n > kMaxExponent) throw Error(ErrorCode::BadRange, "n above 2^32");
    for (Exponent m = 1; m < n; ++m) {
      if (ms && !std::binary_search(ms->begin(), ms->end(), m)) continue;
      for (auto p : ps) {
        for (std::uint64_t a = 1; a < p; ++a) {
          for (int e1 : {1, -1}) {
            for (int e2 : {1, -1}) items.push_back({a, p - a, p, n, m, e1, e2});
          }
        }
      }
    }
  }
  Table t{{"family", "a", "b", "p", "n", "m", "eps1", "eps2", "verdict", "case", "cyclo_factor", "checked"}, {}};
  t.rows = parallel_map(items.size(), o.jobs, [&](std::size_t i) {
    const Item& it = items[i];
    const Integer a(static_cast<unsigned long>(it.a)), b(static_cast<unsigned long>(it.b)),
        p(static_cast<unsigned long>(it.p));
    const TrinomialVerdict v = classify_trinomial(a, b, p, it.n, it.m, it.e1, it.e2);
    bool ok = true;
    if (o.check) {
      const Decomposition d = decompose(make_trinomial(a, b, p, it.n, it.m, it.e1, it.e2));
      ok = d.irreducible == !v.reducible && d.cyclotomic == v.cyclo_factor;
    }
    return std::vector<std::string>{"trinomial", std::to_string(it.a), std::to_string(it.b),
                                    std::to_string(it.p), std::to_string(it.n), std::to_string(it.m),
                                    sign_text(it.e1), sign_text(it.e2),
                                    v.reducible ? "reducible" : "irreducible",
                                    std::string(to_string(v.case_tag)), to_string(v.cyclo_factor),
                                    check_cell(o.check, ok)};
  });
  return t;
}

Table sweep_quadrinomial(const Options& o) {
  struct Item {
    Exponent n, m, r;
    int e1, e2, e3;
  };
  constexpr Exponent kMaxQuadrinomialDegree = 256;
  const auto ns = parse_range(o.n_range.empty() ? "3..8" : o.n_range, "n");
  std::vector<Item> items;
  for (Exponent n : ns) {
    if (n > kMaxQuadrinomialDegree) {
      throw Error(ErrorCode::BadRange, "quadrinomial sweep is limited to n <= " + std::to_string(kMaxQuadrinomialDegree));
    }
    for (Exponent m = 2; m < n; ++m) {
      for (Exponent r = 1; r < m; ++r) {
        for (int e1 : {1, -1}) {
          for (int e2 : {1, -1}) {
            for (int e3 : {1, -1}) items.push_back({n, m, r, e1, e2, e3});
          }
        }
      }
    }
  }
  Table t{{"family", "n", "m", "r", "eps1", "eps2", "eps3", "verdict", "case", "cyclo_factor", "checked"}, {}};
  t.rows = parallel_map(items.size(), o.jobs, [&](std::size_t i) {
    const Item& it = items[i];
    const SeparabilityReport s = quadrinomial_separable(it.n, it.m, it.r, it.e1, it.e2, it.e3);
    bool ok = true;
    if (o.check) {
      ok = squarefree_part_check(make_quadrinomial(it.n, it.m, it.r, it.e1, it.e2, it.e3)).is_squarefree ==
           s.separable;
    }
    return std::vector<std::string>{"quadrinomial", std::to_string(it.n), std::to_string(it.m),
                                    std::to_string(it.r), sign_text(it.e1), sign_text(it.e2),
                                    sign_text(it.e3), s.separable ? "separable" : "not-separable",
                                    s.by_theorem ? "theorem" : "gcd", to_string(s.repeated_factor),
                                    check_cell(o.check, ok)};
  });
  return t;
}

InstanceParams instance_params(const Options& o) {
  InstanceParams params;
  params.max_degree = o.max_degree;
  params.min_terms = o.min_terms;
  params.max_terms = o.max_terms;
  params.seed = o.seed;
  params.prime_pool = primes_in(parse_range(o.p_range.empty() ? "2..97" : o.p_range, "p"));
  if (params.prime_pool.empty()) throw Error(ErrorCode::BadRange, "no primes in the --p range");
  return params;
}

Table sweep_prime_sum(const Options& o) {
  const InstanceParams params = instance_params(o);
  Table t{{"family", "index", "poly", "verdict", "case", "cyclo_factor", "checked"}, {}};
  t.rows = parallel_map(o.count, o.jobs, [&](std::size_t i) {
    const SparsePoly f = gen_prime_sum_instance(params, i);
    const Decomposition d = decompose(f);
    std::string checked = "-";
    if (o.check) {
      try {
        checked = verify_instance(f).passed ? "yes" : "no";
      } catch (const Error& e) {
        if (e.code() != ErrorCode::LimitExceeded) throw;
        checked = "skipped";
      }
    }
    return std::vector<std::string>{"prime-sum-random", std::to_string(i), to_string(f),
                                    d.irreducible ? "irreducible" : "reducible",
                                    d.certificate.size() == 1 ? "binomial" : "prime-sum",
                                    to_string(d.cyclotomic), checked};
  });
  return t;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  Table t;
  if (o.family == "trinomial") {
    t = sweep_trinomial(o);
  } else if (o.family == "quadrinomial") {
    t = sweep_quadrinomial(o);
  } else if (o.family == "prime-sum-random") {
    t = sweep_prime_sum(o);
  } else {
    throw Error(ErrorCode::BadRange, "unknown family '" + o.family + "'");
  }
  Sink sink(o.output, out);
  write_table(sink.stream(), t, o.json);
  sink.close(o.output);
  const std::size_t checked = t.header.size() - 1;
  const bool all_ok = std::none_of(t.rows.begin(), t.rows.end(),
                                   [checked](const auto& row) { return row[checked] == "no"; });
  return all_ok ? 0 : kExitInternal;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const Options& o, std::ostream& out) {
  const InstanceParams params = instance_params(o);
  struct Outcome {
    enum Kind { Pass, Fail, Skip } kind = Pass;
    std::string input;
    std::string route;
    std::vector<std::string> detail;
  };
  const auto outcomes = parallel_map(o.count, o.jobs, [&](std::size_t i) {
    Outcome r;
    try {
      const SparsePoly f = gen_prime_sum_instance(params, i);
      r.input = to_string(f);
      const VerificationRecord rec = verify_instance(f);
      r.route = rec.route;
      r.kind = rec.passed ? Outcome::Pass : Outcome::Fail;
      r.detail = rec.passed ? rec.notes : rec.violations;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::LimitExceeded && e.code() != ErrorCode::InfeasibleParams) throw;
      r.kind = Outcome::Skip;
      r.detail.push_back(e.what());
    }
    return r;
  });

  Sink sink(o.output, out);
  std::ostream& os = sink.stream();
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Outcome& r = outcomes[i];
    const char* status = r.kind == Outcome::Pass ? "pass" : r.kind == Outcome::Fail ? "fail" : "skipped";
    (r.kind == Outcome::Pass ? passed : r.kind == Outcome::Fail ? failed : skipped)++;
    if (o.json) {
      json rec = {{"index", i},        {"input", r.input},   {"route", r.route},
                  {"status", status},  {"detail", r.detail}, {"schema_version", kSchemaVersion}};
      os << rec.dump() << '\n';
    } else if (r.kind != Outcome::Pass) {
      os << status << " #" << i << " " << (r.input.empty() ? "(not generated)" : r.input);
      for (const auto& d : r.detail) os << " [" << d << "]";
      os << '\n';
    }
  }
  if (o.json) {
    const json summary = {{"command", "verify"}, {"count", o.count},     {"seed", o.seed},
                          {"passed", passed},    {"failed", failed},     {"skipped", skipped},
                          {"schema_version", kSchemaVersion}};
    os << summary.dump() << '\n';
  } else {
    os << "instances: " << o.count << ", passed: " << passed << ", failed: " << failed
       << ", skipped: " << skipped << '\n';
  }
  sink.close(o.output);
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclotomic factors and irreducibility of integer polynomials with |a_0| equal to "
               "the sum of the other coefficient magnitudes",
               "cyclofac"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--fast", o.fast, "classify: try the corollary criteria first");
  app.add_flag("--check", o.check, "verification mode: recompute through generic paths and the oracle");
  app.add_flag("--json", o.json, "structured output, one JSON object per line");
  app.add_option("--output", o.output, "write the result to this file");
  app.add_option("--seed", o.seed, "seed for random instances");
  app.add_option("--terms", o.terms, "polynomial as exponent:coefficient list, e.g. 6:1,2:1,0:2");
  app.add_option("--jobs", o.jobs, "worker threads for sweep/verify (0 = all cores)");

  auto* classify = app.add_subcommand("classify", "decide irreducibility and decompose f = f_c f_n");
  classify->add_option("poly", o.poly, "polynomial, e.g. x^6+x^2+2");
  auto* cyclofactor = app.add_subcommand("cyclofactor", "cyclotomic part from the signed binomials");
  cyclofactor->add_option("poly", o.poly, "polynomial");
  auto* disc = app.add_subcommand("disc", "discriminant of x^n + a x^m + b");
  disc->add_option("n", o.disc_n)->required();
  disc->add_option("m", o.disc_m)->required();
  disc->add_option("a", o.disc_a)->required();
  disc->add_option("b", o.disc_b)->required();
  auto* separable = app.add_subcommand("separable", "separability over the rationals");
  separable->add_option("poly", o.poly, "polynomial");

  auto* sweep = app.add_subcommand("sweep", "tabulate a family over a parameter box as CSV");
  sweep->add_option("--family", o.family, "trinomial | quadrinomial | prime-sum-random")->required();
  sweep->add_option("--n", o.n_range, "degree range, e.g. 2..6");
  sweep->add_option("--m", o.m_range, "middle exponent range (trinomial)");
  sweep->add_option("--p", o.p_range, "primes for |f(0)|, e.g. 2..13 or 2,3");
  sweep->add_option("--count", o.count, "instances (prime-sum-random)");
  sweep->add_option("--max-degree", o.max_degree, "degree bound (prime-sum-random)");
  sweep->add_option("--min-terms", o.min_terms, "minimum nonconstant terms (prime-sum-random)");
  sweep->add_option("--max-terms", o.max_terms, "maximum nonconstant terms (prime-sum-random)");

  auto* verify = app.add_subcommand("verify", "cross-check seeded instances against the oracle");
  verify->add_option("--count", o.count, "number of instances");
  verify->add_option("--max-degree", o.max_degree, "degree bound");
  verify->add_option("--min-terms", o.min_terms, "minimum nonconstant terms");
  verify->add_option("--max-terms", o.max_terms, "maximum nonconstant terms");
  verify->add_option("--p", o.p_range, "primes for |f(0)|, e.g. 2..97");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed_ms = [&start] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  try {
    std::optional<VerificationScope> scope;
    if (o.check) scope.emplace(true);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (verify->parsed()) return cmd_verify(o, out);

    const std::string name = app.get_subcommands().front()->get_name();
    Report rep(name);
    int code = 0;
    if (classify->parsed()) {
      code = cmd_classify(o, rep);
    } else if (cyclofactor->parsed()) {
      code = cmd_cyclofactor(o, rep);
    } else if (disc->parsed()) {
      code = cmd_disc(o, rep);
    } else if (separable->parsed()) {
      code = cmd_separable(o, rep);
    }
    Sink sink(o.output, out);
    rep.emit(sink.stream(), o.json, elapsed_ms());
    sink.close(o.output);
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace cyclofac
