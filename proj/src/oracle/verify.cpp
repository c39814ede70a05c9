#include "cyclofac/classifier.hpp"
#include "cyclofac/error.hpp"
#include "cyclofac/oracle.hpp"

namespace cyclofac {

namespace {

bool oracle_irreducible(const FactorList& fl) {
  return fl.content == 1 && fl.factors.size() == 1 && fl.factors.front().multiplicity == 1;
}

}  // namespace

VerificationRecord verify_instance(const SparsePoly& f, const OracleLimits& limits) {
  VerificationRecord rec;
  rec.input = f;
  const HypothesisReport rep = hypothesis_check(f);
  if (!rep.sum_condition_holds) {
    throw Error(ErrorCode::HypothesisViolation, to_string(f) + ": |a_0| is not the sum of the other coefficients");
  }
  rec.factors = kronecker_factor(f, limits);

  auto require = [&rec](bool ok, std::string clause) {
    if (!ok) rec.violations.push_back(std::move(clause));
  };

  std::vector<const IrreducibleFactor*> other;
  for (const auto& g : rec.factors.factors) {
    if (!g.cyclotomic_index) other.push_back(&g);
  }
  rec.noncyclotomic_factor_count = other.size();
  const SparsePoly oracle_cyclo = rec.factors.cyclotomic_product();

  if (rep.prime_sum()) {
    rec.route = "prime-sum";
    Decomposition dec;
    try {
      dec = decompose(f);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InternalInconsistency) throw;
      rec.violations.push_back(std::string("decompose: ") + e.what());
      return rec;
    }
    rec.cyclotomic = dec.cyclotomic;
    rec.noncyclotomic = dec.noncyclotomic;

    require(dec.cyclotomic == oracle_cyclo,
            "f_c = " + to_string(dec.cyclotomic) + " but the oracle's cyclotomic factors multiply to " +
                to_string(oracle_cyclo));
    bool simple = true;
    for (const auto& g : rec.factors.factors) simple = simple && g.multiplicity == 1;
    require(simple, "a factor has multiplicity above one");
    require(squarefree_part_check(f).is_squarefree, "f is not squarefree");

    if (rep.exponents.size() == 1) {
      require(other.empty(), "binomial has a non-cyclotomic factor");
      require(dec.noncyclotomic == SparsePoly::constant(rec.factors.content * rec.factors.unit),
              "binomial cofactor differs from unit * content");
    } else {
      const SparsePoly fn = normalize(dec.noncyclotomic);
      require(rec.factors.content == 1, "f is not primitive");
      require(other.size() == 1 && other.front()->poly == fn,
              "oracle does not report f_n = " + to_string(dec.noncyclotomic) +
                  " as its only non-cyclotomic irreducible factor");
      require(!is_reciprocal(dec.noncyclotomic), "f_n is reciprocal");
    }
    require(dec.irreducible == oracle_irreducible(rec.factors),
            std::string("decompose says ") + (dec.irreducible ? "irreducible" : "reducible") +
                ", oracle disagrees");
  } else {
    rec.route = "general";
    rec.cyclotomic = general_cyclotomic_part(f);
    rec.noncyclotomic = *divide_exact(f, rec.cyclotomic);
    require(rec.cyclotomic == oracle_cyclo,
            "cyclotomic part " + to_string(rec.cyclotomic) + " but the oracle's cyclotomic factors multiply to " +
                to_string(oracle_cyclo));
    // A divisor with 0 < |g(0)| <= |lc g| is a product of cyclotomic polynomials.
    std::size_t nonreciprocal = 0;
    for (const auto* g : other) {
      require(abs(g->poly.constant_term()) > abs(g->poly.leading_coefficient()),
              "non-cyclotomic factor " + to_string(g->poly) + " has |g(0)| <= |lc g|");
      if (!is_reciprocal(g->poly)) ++nonreciprocal;
    }
    rec.notes.push_back(std::to_string(nonreciprocal) + " non-reciprocal factor" +
                        (nonreciprocal == 1 ? "" : "s"));
  }

  for (const auto& b : rep.binomials()) {
    require(divide_exact(b.to_poly(), rec.cyclotomic).has_value(),
            to_string(rec.cyclotomic) + " does not divide " + to_string(b.to_poly()));
  }
  rec.passed = rec.violations.empty();
  return rec;
}

}  // namespace cyclofac
