#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace eml {

// Exact binary rational m * 2^e. Canonical form keeps m odd (or m == 0 with
// e == 0), so equality is plain field comparison. Addition, subtraction and
// multiplication are exact; rounding happens only through the explicit
// directed round_down/round_up calls.
class Dyadic {
 public:
  Dyadic() : mant_(0), exp_(0) {}
  explicit Dyadic(long v) : mant_(v), exp_(0) { normalize(); }
  Dyadic(mpz_class mant, long exp2) : mant_(std::move(mant)), exp_(exp2) { normalize(); }

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(1); }
  static Dyadic pow2(long e) { return Dyadic(mpz_class(1), e); }

  const mpz_class& mantissa() const { return mant_; }
  long exponent() const { return exp_; }

  bool is_zero() const { return mant_ == 0; }
  int sign() const { return mpz_sgn(mant_.get_mpz_t()); }

  Dyadic operator-() const { return Dyadic(-mant_, exp_); }
  Dyadic abs() const { return sign() < 0 ? -*this : *this; }
  Dyadic mul_pow2(long e) const { return is_zero() ? *this : Dyadic(mant_, exp_ + e); }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic(a.mant_ * b.mant_, a.exp_ + b.exp_);
  }

  // Exact three-way comparison.
  int compare(const Dyadic& o) const;
  bool operator==(const Dyadic& o) const { return mant_ == o.mant_ && exp_ == o.exp_; }
  bool operator!=(const Dyadic& o) const { return !(*this == o); }
  bool operator<(const Dyadic& o) const { return compare(o) < 0; }
  bool operator<=(const Dyadic& o) const { return compare(o) <= 0; }
  bool operator>(const Dyadic& o) const { return compare(o) > 0; }
  bool operator>=(const Dyadic& o) const { return compare(o) >= 0; }

  // Number of bits in |mantissa| (0 for zero).
  long bit_length() const {
    return is_zero() ? 0 : static_cast<long>(mpz_sizeinbase(mant_.get_mpz_t(), 2));
  }
  // floor(log2 |x|); requires nonzero.
  long floor_log2_abs() const { return bit_length() - 1 + exp_; }

  // Directed rounding to at most `bits` significant bits (bits >= 1).
  Dyadic round_down(long bits) const;  // toward -infinity
  Dyadic round_up(long bits) const;    // toward +infinity

  double to_double() const;
  std::string to_string() const;  // exact "m*2^e"

 private:
  mpz_class mant_;
  long exp_;
  void normalize();
};

}  // namespace eml
