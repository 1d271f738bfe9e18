#include "eml/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace eml {

void Dyadic::normalize() {
  if (mant_ == 0) {
    exp_ = 0;
    return;
  }
  mp_bitcnt_t tz = mpz_scan1(mant_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_fdiv_q_2exp(mant_.get_mpz_t(), mant_.get_mpz_t(), tz);  // exact, trailing zeros
    exp_ += static_cast<long>(tz);
  }
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long e = std::min(a.exp_, b.exp_);
  mpz_class ma = a.mant_, mb = b.mant_;
  if (a.exp_ > e) mpz_mul_2exp(ma.get_mpz_t(), ma.get_mpz_t(), a.exp_ - e);
  if (b.exp_ > e) mpz_mul_2exp(mb.get_mpz_t(), mb.get_mpz_t(), b.exp_ - e);
  return Dyadic(ma + mb, e);
}

int Dyadic::compare(const Dyadic& o) const {
  int sa = sign(), sb = o.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  // value in [2^(L-1+e), 2^(L+e)) for positives; disjoint windows decide fast
  long wa = floor_log2_abs(), wb = o.floor_log2_abs();
  if (wa != wb) {
    int mag = wa < wb ? -1 : 1;
    return sa > 0 ? mag : -mag;
  }
  long e = std::min(exp_, o.exp_);
  mpz_class ma = mant_, mb = o.mant_;
  if (exp_ > e) mpz_mul_2exp(ma.get_mpz_t(), ma.get_mpz_t(), exp_ - e);
  if (o.exp_ > e) mpz_mul_2exp(mb.get_mpz_t(), mb.get_mpz_t(), o.exp_ - e);
  return cmp(ma, mb) < 0 ? -1 : (cmp(ma, mb) > 0 ? 1 : 0);
}

Dyadic Dyadic::round_down(long bits) const {
  if (bits < 1) throw std::invalid_argument("round_down: bits < 1");
  long len = bit_length();
  if (len <= bits) return *this;
  long s = len - bits;
  mpz_class q;
  mpz_fdiv_q_2exp(q.get_mpz_t(), mant_.get_mpz_t(), s);  // floor
  return Dyadic(q, exp_ + s);
}

Dyadic Dyadic::round_up(long bits) const {
  if (bits < 1) throw std::invalid_argument("round_up: bits < 1");
  long len = bit_length();
  if (len <= bits) return *this;
  long s = len - bits;
  mpz_class q;
  mpz_cdiv_q_2exp(q.get_mpz_t(), mant_.get_mpz_t(), s);  // ceil
  return Dyadic(q, exp_ + s);
}

double Dyadic::to_double() const {
  if (is_zero()) return 0.0;
  // keep 64 mantissa bits, apply exponent with ldexp (saturates to +-inf)
  Dyadic r = round_down(64);
  double m = r.mant_.get_d();
  long e = r.exp_;
  if (e > 100000) return sign() > 0 ? HUGE_VAL : -HUGE_VAL;
  if (e < -100000) return sign() > 0 ? 0.0 : -0.0;
  return std::ldexp(m, static_cast<int>(e));
}

std::string Dyadic::to_string() const {
  return mant_.get_str() + "*2^" + std::to_string(exp_);
}

}  // namespace eml
