#include "cyclofac/error.hpp"
#include "cyclofac/oracle.hpp"

namespace cyclofac {

namespace {

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

DensePoly divide_by(const DensePoly& p, const Integer& c) {
  std::vector<Integer> out(p.coefficients());
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return DensePoly(std::move(out));
}

}  // namespace

Integer resultant(const SparsePoly& f, const SparsePoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  DensePoly a(f), b(g);
  Integer sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -1;
  }
  const auto db0 = static_cast<unsigned long>(b.degree());
  const auto da0 = static_cast<unsigned long>(a.degree());
  if (db0 == 0) return sign * ipow(b[0], da0);

  const Integer ca = content(a), cb = content(b);
  a = divide_by(a, ca);
  b = divide_by(b, cb);
  const Integer t = ipow(ca, db0) * ipow(cb, da0);
  Integer gg = 1, h = 1;
  for (;;) {
    const auto delta = static_cast<unsigned long>(a.degree() - b.degree());
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    DensePoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = divide_by(r, gg * ipow(h, delta));
    gg = a.leading_coefficient();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = gg;
    } else {
      Integer num = ipow(gg, delta);
      const Integer den = ipow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) break;
  }
  const auto da = static_cast<unsigned long>(a.degree());
  Integer last = ipow(b[0], da);
  if (da > 1) {
    const Integer den = ipow(h, da - 1);
    mpz_divexact(last.get_mpz_t(), last.get_mpz_t(), den.get_mpz_t());
  }
  return sign * t * last;
}

Integer discriminant(const SparsePoly& f) {
  if (f.is_constant()) throw Error(ErrorCode::ConstantInput, "discriminant of a constant");
  const Exponent n = f.degree();
  Integer r = resultant(f, derivative(f));
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.leading_coefficient().get_mpz_t());
  if (n % 4 == 2 || n % 4 == 3) r = -r;
  return r;
}

}  // namespace cyclofac
