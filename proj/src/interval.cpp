#include "eml/interval.hpp"

#include <algorithm>

namespace eml {

// exact compare dyadic vs rational: m*2^e <=> n/d  (d > 0)
int compare_dyadic_rational(const Dyadic& a, const mpq_class& q) {
  mpz_class lhs = a.mantissa() * q.get_den();
  long e = a.exponent();
  mpz_class rhs = q.get_num();
  if (e >= 0) {
    mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), e);
  } else {
    mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), -e);
  }
  int c = cmp(lhs, rhs);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

bool RealInterval::contains(const mpq_class& q) const {
  return compare_dyadic_rational(lo, q) <= 0 && compare_dyadic_rational(hi, q) >= 0;
}

RealInterval iv_add(const RealInterval& a, const RealInterval& b, long bits) {
  return RealInterval{a.lo + b.lo, a.hi + b.hi}.round_out(bits);
}

RealInterval iv_sub(const RealInterval& a, const RealInterval& b, long bits) {
  return RealInterval{a.lo - b.hi, a.hi - b.lo}.round_out(bits);
}

RealInterval iv_mul(const RealInterval& a, const RealInterval& b, long bits) {
  Dyadic p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return RealInterval{std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})}.round_out(bits);
}

RealInterval iv_square(const RealInterval& a, long bits) {
  Dyadic l2 = a.lo * a.lo, h2 = a.hi * a.hi;
  if (a.lo.sign() <= 0 && a.hi.sign() >= 0) {
    return RealInterval{Dyadic::zero(), std::max(l2, h2)}.round_out(bits);
  }
  return RealInterval{std::min(l2, h2), std::max(l2, h2)}.round_out(bits);
}

}  // namespace eml
