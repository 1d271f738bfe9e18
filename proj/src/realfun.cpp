#include "eml/realfun.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <mutex>

// Series conventions: a quantity v is represented as an mpz V at scale S,
// v ~= V * 2^-S, together with an integer bound E on |V*2^-S - v| in ulps
// (units of 2^-S). Multiplications truncate toward zero (<= 1 ulp), integer
// divisions likewise; per-term error stays O(1) because every series below
// has |argument| <= 1/2, and tails are bounded by geometric comparison once
// the stored term underflows to zero.

namespace eml {

// exact compare dyadic vs rational (defined in interval.cpp)
int compare_dyadic_rational(const Dyadic& a, const mpq_class& q);

namespace {

// floor(d * 2^S) with error in [0, 1).
mpz_class fixed_floor(const Dyadic& d, long S) {
  mpz_class r = d.mantissa();
  long sh = S + d.exponent();
  if (sh >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), sh);
  } else {
    mpz_fdiv_q_2exp(r.get_mpz_t(), r.get_mpz_t(), -sh);
  }
  return r;
}

mpz_class trunc_shift(const mpz_class& a, long S) {  // trunc(a / 2^S)
  mpz_class r;
  mpz_tdiv_q_2exp(r.get_mpz_t(), a.get_mpz_t(), S);
  return r;
}

RealInterval from_fixed(const mpz_class& acc, long err, long S, long out_bits) {
  return RealInterval{Dyadic(acc - err, -S), Dyadic(acc + err, -S)}.round_out(out_bits);
}

// [lo*k, hi*k] for integer k of either sign
RealInterval scale_int(const RealInterval& v, const mpz_class& k) {
  Dyadic kd(k, 0);
  if (sgn(k) >= 0) return {v.lo * kd, v.hi * kd};
  return {v.hi * kd, v.lo * kd};
}

// exp(y) for |y| <= 1/4.
RealInterval exp_small(const Dyadic& y, long S, long out_bits) {
  mpz_class Y = fixed_floor(y, S);
  mpz_class term(1);
  mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), S);
  mpz_class acc = term;
  long n = 0;
  while (term != 0) {
    ++n;
    term = trunc_shift(term * Y, S);
    term /= n;
    acc += term;
    if (n > 4 * S + 64) break;  // unreachable; |y|<=1/4 gives >= 2 bits/term
  }
  // per-term ulp error <= 6 (contraction e' <= e/4 + 4), tail <= 8 once a
  // stored term hits zero, plus directed-Y sensitivity
  long err = 6 * n + 16;
  return from_fixed(acc, err, S, out_bits);
}

// atanh(t) from T = fixed t at scale S, |t| <= 0.21, input error terr ulps.
RealInterval atanh_fixed(const mpz_class& T, long terr, long S, long out_bits) {
  mpz_class U = trunc_shift(T * T, S);
  mpz_class pw = T, acc = T;
  long j = 0;
  while (pw != 0) {
    ++j;
    pw = trunc_shift(pw * U, S);
    acc += pw / (2 * j + 1);
    if (j > 2 * S) break;
  }
  long err = 6 * j + 16 + 2 * terr;  // d atanh/dt < 1.05 on |t| <= 0.21
  return from_fixed(acc, err, S, out_bits);
}

// atan(t) from fixed T, |t| <= 0.43, input error terr ulps.
RealInterval atan_fixed(const mpz_class& T, long terr, long S, long out_bits) {
  mpz_class U = trunc_shift(T * T, S);
  mpz_class pw = T, acc = T;
  long j = 0;
  while (pw != 0) {
    ++j;
    pw = -trunc_shift(pw * U, S);
    acc += pw / (2 * j + 1);
    if (j > 2 * S) break;
  }
  long err = 6 * j + 16 + 2 * terr;
  return from_fixed(acc, err, S, out_bits);
}

std::pair<mpz_class, long> machin_atan_inv(unsigned long q, long S) {
  mpz_class scale(1);
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), S);
  mpz_class q2 = mpz_class(q) * q;
  mpz_class pw(q), acc(0);
  long j = 0;
  while (true) {
    mpz_class term = scale / (pw * (2 * j + 1));
    if (term == 0) break;
    if (j % 2 == 0) acc += term; else acc -= term;
    pw *= q2;
    ++j;
  }
  return {acc, j + 2};
}

std::mutex g_const_mutex;

template <typename Compute>
RealInterval cached_constant(std::map<long, RealInterval>& cache, long bits, Compute compute) {
  std::lock_guard<std::mutex> lock(g_const_mutex);
  auto it = cache.find(bits);
  if (it != cache.end()) return it->second;
  return cache.emplace(bits, compute()).first->second;
}

// nearest integer to d (rounding quality affects tightness only)
mpz_class nearest_int(const Dyadic& d) {
  mpz_class r = d.mantissa();
  long e = d.exponent();
  if (e >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
    return r;
  }
  mpz_class half(1);
  if (-e - 1 > 0) mpz_mul_2exp(half.get_mpz_t(), half.get_mpz_t(), -e - 1);
  r += half;
  mpz_fdiv_q_2exp(r.get_mpz_t(), r.get_mpz_t(), -e);
  return r;
}

// approximate quotient a/b to ~bits significant bits (tightness only)
Dyadic div_approx(const Dyadic& a, const Dyadic& b, long bits) {
  assert(!b.is_zero());
  if (a.is_zero()) return Dyadic::zero();
  long K = bits + b.bit_length() - a.bit_length() + 8;
  if (K < 0) K = 0;
  mpz_class num = a.mantissa();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), K);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.mantissa().get_mpz_t());
  return Dyadic(q, a.exponent() - b.exponent() - K);
}

// fixed-point ratio num/den at scale S with error <= 1 ulp (floor); den > 0
mpz_class fixed_ratio(const Dyadic& num, const Dyadic& den, long S) {
  assert(den.sign() > 0);
  mpz_class n = num.mantissa();
  mpz_class d = den.mantissa();
  long sh = S + num.exponent() - den.exponent();
  if (sh >= 0) {
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), sh);
  } else {
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), -sh);
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

RealInterval clamp_unit(const RealInterval& v) {
  Dyadic lo = std::max(v.lo, Dyadic(-1)), hi = std::min(v.hi, Dyadic(1));
  if (lo > hi) return v;  // cannot happen for sound inputs; keep sound anyway
  return {lo, hi};
}

// sin/cos series for exact |phi| <= 0.83.
std::pair<RealInterval, RealInterval> sin_cos_small(const Dyadic& phi, long S, long out_bits) {
  mpz_class F = fixed_floor(phi, S);
  mpz_class U = trunc_shift(F * F, S);
  mpz_class sterm = F, sacc = F;
  long js = 0;
  while (sterm != 0) {
    ++js;
    sterm = -trunc_shift(sterm * U, S);
    sterm /= (2 * js) * (2 * js + 1);
    sacc += sterm;
    if (js > 2 * S) break;
  }
  mpz_class cterm(1);
  mpz_mul_2exp(cterm.get_mpz_t(), cterm.get_mpz_t(), S);
  mpz_class cacc = cterm;
  long jc = 0;
  while (cterm != 0) {
    ++jc;
    cterm = -trunc_shift(cterm * U, S);
    cterm /= (2 * jc - 1) * (2 * jc);
    cacc += cterm;
    if (jc > 2 * S) break;
  }
  return {from_fixed(sacc, 6 * js + 16, S, out_bits),
          from_fixed(cacc, 6 * jc + 16, S, out_bits)};
}

// sin/cos at a reduced point |d| <= 8.
std::pair<RealInterval, RealInterval> sin_cos_point(const Dyadic& d, long bits) {
  RealInterval half_pi = pi_interval(bits + 16).mul_pow2(-1);
  long q = std::lround(d.to_double() / 1.5707963267948966);
  RealInterval phi = iv_sub(RealInterval::point(d), scale_int(half_pi, mpz_class(q)), bits + 24);
  Dyadic mid = phi.midpoint();
  Dyadic half_w = phi.width().mul_pow2(-1);
  auto [s, c] = sin_cos_small(mid, bits + 32, bits + 16);
  s = s.inflate(half_w);  // |sin'|, |cos'| <= 1
  c = c.inflate(half_w);
  RealInterval sd, cd;
  switch (((q % 4) + 4) % 4) {
    case 0: sd = s; cd = c; break;
    case 1: sd = c; cd = s.neg(); break;
    case 2: sd = s.neg(); cd = c.neg(); break;
    default: sd = c.neg(); cd = s; break;
  }
  return {clamp_unit(sd.round_out(bits + 8)), clamp_unit(cd.round_out(bits + 8))};
}

}  // namespace

RealInterval pi_interval(long bits) {
  static std::map<long, RealInterval> cache;
  return cached_constant(cache, bits, [bits] {
    long S = bits + 24;
    auto [a5, e5] = machin_atan_inv(5, S);
    auto [a239, e239] = machin_atan_inv(239, S);
    return from_fixed(16 * a5 - 4 * a239, 16 * e5 + 4 * e239 + 4, S, bits + 8);
  });
}

RealInterval ln2_interval(long bits) {
  static std::map<long, RealInterval> cache;
  return cached_constant(cache, bits, [bits] {
    long S = bits + 24;
    mpz_class scale(1);
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), S + 1);
    mpz_class pw(3), acc(0);
    long j = 0;
    while (true) {
      mpz_class term = scale / (pw * (2 * j + 1));
      if (term == 0) break;
      acc += term;
      pw *= 9;
      ++j;
    }
    // acc holds atanh(1/3) at scale S+1; reading it at scale S doubles it
    return from_fixed(acc, j + 3, S, bits + 8);
  });
}

RealInterval e_interval(long bits) {
  static std::map<long, RealInterval> cache;
  return cached_constant(cache, bits, [bits] { return exp_point(Dyadic(1), bits); });
}

RealInterval exp_point(const Dyadic& x, long bits) {
  if (x.is_zero()) return RealInterval::point(Dyadic(1));
  long L = x.floor_log2_abs();
  if (L <= -(bits + 8)) {
    Dyadic b = Dyadic::pow2(2 * L + 2);  // |e^x - (1+x)| <= x^2 for |x| <= 1
    Dyadic base = Dyadic(1) + x;
    return RealInterval{base - b, base + b}.round_out(bits + 8);
  }
  long s = std::max(0L, L + 3);
  long S = bits + s + 32;
  RealInterval r = exp_small(x.mul_pow2(-s), S, S);
  for (long i = 0; i < s; ++i) r = iv_square(r, S);
  return r.round_out(bits + 8);
}

RealInterval exp_interval(const RealInterval& x, long bits) {
  return {exp_point(x.lo, bits).lo, exp_point(x.hi, bits).hi};
}

RealInterval ln_point(const Dyadic& x, long bits) {
  assert(x.sign() > 0);
  long L = x.floor_log2_abs();
  long absL = L < 0 ? -L : L, kbits = 0;
  while (absL >> kbits) ++kbits;
  long S = bits + 32 + kbits;
  Dyadic xr = x.round_down(S);  // xr <= x, ln x - ln xr <= 2^(3-S)
  long k = xr.floor_log2_abs();
  Dyadic m = xr.mul_pow2(-k);  // [1, 2)
  if (m >= Dyadic(3).mul_pow2(-1)) {
    m = m.mul_pow2(-1);
    k += 1;
  }
  // m in [0.75, 1.5); t = (m-1)/(m+1) in [-1/7, 1/5]
  mpz_class T = fixed_ratio(m - Dyadic(1), m + Dyadic(1), S);
  RealInterval at = atanh_fixed(T, 1, S, S).mul_pow2(1);
  RealInterval kl2 = scale_int(ln2_interval(S), mpz_class(k));
  RealInterval r{at.lo + kl2.lo, at.hi + kl2.hi + Dyadic::pow2(3 - S)};
  return r.round_out(bits + 8);
}

RealInterval ln_interval(const RealInterval& x, long bits) {
  assert(x.lo.sign() > 0);
  return {ln_point(x.lo, bits).lo, ln_point(x.hi, bits).hi};
}

RealInterval ln_rational(const mpq_class& q, long bits) {
  assert(q > 0);
  RealInterval ln_num = q.get_num() == 1 ? RealInterval::point(Dyadic(0))
                                         : ln_point(Dyadic(q.get_num(), 0), bits + 4);
  RealInterval ln_den = q.get_den() == 1 ? RealInterval::point(Dyadic(0))
                                         : ln_point(Dyadic(q.get_den(), 0), bits + 4);
  return iv_sub(ln_num, ln_den, bits + 8);
}

RealInterval atan2_point(const Dyadic& y, const Dyadic& x, long bits) {
  if (y.is_zero()) {
    assert(x.sign() > 0 && "atan2_point: argument on the branch cut");
    return RealInterval::point(Dyadic(0));
  }
  long S = bits + 40;
  RealInterval pi = pi_interval(bits + 16);
  if (x.is_zero()) {
    RealInterval h = pi.mul_pow2(-1);
    return (y.sign() > 0 ? h : h.neg()).round_out(bits + 8);
  }
  Dyadic ax = x.abs(), ay = y.abs();
  bool inverted = ay > ax;  // base angle from the ratio <= 1
  mpz_class T = inverted ? fixed_ratio(ax, ay, S) : fixed_ratio(ay, ax, S);
  mpz_class thresh = fixed_floor(Dyadic(27146).mul_pow2(-16), S);  // ~tan(pi/8)
  RealInterval base;
  if (T <= thresh) {
    base = atan_fixed(T, 1, S, bits + 16);
  } else {
    // atan(t) = pi/4 + atan((t-1)/(t+1))
    mpz_class scale(1);
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), S);
    mpz_class num = T - scale, den = T + scale;
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), S);
    mpz_class W;
    mpz_fdiv_q(W.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    base = iv_add(pi.mul_pow2(-2), atan_fixed(W, 3, S, bits + 16), bits + 16);
  }
  if (inverted) base = iv_sub(pi.mul_pow2(-1), base, bits + 16);
  RealInterval r;
  if (x.sign() > 0) {
    r = y.sign() > 0 ? base : base.neg();
  } else {
    RealInterval a = iv_sub(pi, base, bits + 16);
    r = y.sign() > 0 ? a : a.neg();
  }
  return r.round_out(bits + 8);
}

std::pair<RealInterval, RealInterval> sin_cos_interval(const RealInterval& theta, long bits) {
  RealInterval unit{Dyadic(-1), Dyadic(1)};
  if (theta.width() >= Dyadic(7)) return {unit, unit};
  Dyadic mid = theta.midpoint();
  RealInterval red = theta;
  if (!mid.is_zero() && mid.floor_log2_abs() > 2) {
    long mag = mid.floor_log2_abs();
    if (mag > 4096) return {unit, unit};  // reduction too costly; sound fallback
    Dyadic two_pi_mid = pi_interval(std::max(64L, mag + 32)).midpoint().mul_pow2(1);
    mpz_class n = nearest_int(div_approx(mid, two_pi_mid, mag + 24));
    if (n != 0) {
      RealInterval ntp = scale_int(pi_interval(bits + mag + 24).mul_pow2(1), n);
      red = RealInterval{theta.lo - ntp.hi, theta.hi - ntp.lo};
    }
  }
  if ((!red.lo.is_zero() && red.lo.floor_log2_abs() > 3) ||
      (!red.hi.is_zero() && red.hi.floor_log2_abs() > 3)) {
    return {unit, unit};
  }
  auto [slo, clo] = sin_cos_point(red.lo, bits);
  auto [shi, chi] = sin_cos_point(red.hi, bits);
  RealInterval s = slo.hull(shi), c = clo.hull(chi);
  RealInterval half_pi = pi_interval(bits + 16).mul_pow2(-1);
  for (long k = -11; k <= 11; ++k) {  // interior extrema at k*pi/2, |red| < 16
    RealInterval kp = scale_int(half_pi, mpz_class(k));
    if (!red.intersects(kp)) continue;
    long m = ((k % 4) + 4) % 4;
    if (m == 1) s = s.hull(RealInterval::point(Dyadic(1)));
    if (m == 3) s = s.hull(RealInterval::point(Dyadic(-1)));
    if (m == 0) c = c.hull(RealInterval::point(Dyadic(1)));
    if (m == 2) c = c.hull(RealInterval::point(Dyadic(-1)));
  }
  return {clamp_unit(s).round_out(bits + 8), clamp_unit(c).round_out(bits + 8)};
}

bool rational_greater_than_e(const mpq_class& q) {
  if (q <= 2) return false;
  if (q >= 3) return true;
  for (long p = 64;; p *= 2) {
    RealInterval e = e_interval(p);
    if (compare_dyadic_rational(e.hi, q) < 0) return true;
    if (compare_dyadic_rational(e.lo, q) > 0) return false;
  }
}

bool rational_greater_than_e_to_e(const mpq_class& q) {
  if (q <= 15) return false;
  if (q >= 16) return true;
  for (long p = 64;; p *= 2) {
    RealInterval ee = exp_interval(e_interval(p), p);
    if (compare_dyadic_rational(ee.hi, q) < 0) return true;
    if (compare_dyadic_rational(ee.lo, q) > 0) return false;
  }
}

bool rational_abs_im_less_than_pi(const mpq_class& im) {
  mpq_class a = im < 0 ? mpq_class(-im) : im;
  if (a <= 3) return true;
  if (a >= mpq_class(22, 7)) return false;  // 22/7 > pi
  for (long p = 64;; p *= 2) {
    RealInterval pi = pi_interval(p);
    if (compare_dyadic_rational(pi.lo, a) > 0) return true;
    if (compare_dyadic_rational(pi.hi, a) < 0) return false;
  }
}

// ---- complex boxes ----

namespace {
RealInterval rational_to_interval(const mpq_class& q, long bits) {
  if (q == 0) return RealInterval::point(Dyadic(0));
  long s = bits + 8;
  mpz_class num = q.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), s);
  mpz_class lo, rem;
  mpz_fdiv_qr(lo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  Dyadic dlo(lo, -s);
  if (rem == 0) return RealInterval::point(dlo);
  return {dlo, Dyadic(lo + 1, -s)};
}
}  // namespace

ComplexBox point_box(const GaussianRational& q, long bits) {
  return {rational_to_interval(q.re, bits), rational_to_interval(q.im, bits)};
}

ComplexBox box_add(const ComplexBox& a, const ComplexBox& b, long bits) {
  return {iv_add(a.re, b.re, bits), iv_add(a.im, b.im, bits)};
}

ComplexBox box_sub(const ComplexBox& a, const ComplexBox& b, long bits) {
  return {iv_sub(a.re, b.re, bits), iv_sub(a.im, b.im, bits)};
}

ComplexBox box_mul(const ComplexBox& a, const ComplexBox& b, long bits) {
  RealInterval re = iv_sub(iv_mul(a.re, b.re, bits + 2), iv_mul(a.im, b.im, bits + 2), bits);
  RealInterval im = iv_add(iv_mul(a.re, b.im, bits + 2), iv_mul(a.im, b.re, bits + 2), bits);
  return {re, im};
}

ComplexBox box_exp(const ComplexBox& a, long bits) {
  if (a.re.hi > Dyadic::pow2(20)) {
    throw OverflowGuard("exp argument real part exceeds 2^20");
  }
  RealInterval mag = exp_interval(a.re, bits);
  auto [s, c] = sin_cos_interval(a.im, bits);
  return {iv_mul(mag, c, bits), iv_mul(mag, s, bits)};
}

bool cut_distance_positive(const ComplexBox& b) {
  return b.re.lo.sign() > 0 || b.im.lo.sign() > 0 || b.im.hi.sign() < 0;
}

ComplexBox box_log(const ComplexBox& b, long bits) {
  if (!cut_distance_positive(b)) throw CutViolation();
  RealInterval m2 = iv_add(iv_square(b.re, bits + 8), iv_square(b.im, bits + 8), bits + 8);
  RealInterval re_part = ln_interval(m2, bits).mul_pow2(-1);
  RealInterval arg = atan2_point(b.im.lo, b.re.lo, bits);
  arg = arg.hull(atan2_point(b.im.lo, b.re.hi, bits));
  arg = arg.hull(atan2_point(b.im.hi, b.re.lo, bits));
  arg = arg.hull(atan2_point(b.im.hi, b.re.hi, bits));
  // true Arg range lies in (-pi, pi); clamp to the pi enclosure, still sound
  Dyadic pi_hi = pi_interval(bits + 8).hi;
  arg = RealInterval{std::max(arg.lo, -pi_hi), std::min(arg.hi, pi_hi)};
  return {re_part.round_out(bits), arg.round_out(bits)};
}

ComplexBox box_log_negative_real(const GaussianRational& q, long bits) {
  assert(q.is_negative_real());
  mpq_class mag = -q.re;
  return {ln_rational(mag, bits), pi_interval(bits)};
}

}  // namespace eml
