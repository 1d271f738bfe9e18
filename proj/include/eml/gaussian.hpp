#pragma once

#include <gmpxx.h>

#include <string>

namespace eml {

// Exact complex rational re + im*i.
struct GaussianRational {
  mpq_class re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }
  static GaussianRational integer(const mpz_class& n) { return {mpq_class(n), mpq_class(0)}; }
  static GaussianRational unit_i() { return {mpq_class(0), mpq_class(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  bool is_negative_real() const { return im == 0 && re < 0; }

  GaussianRational operator-() const { return {-re, -im}; }
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianRational inverse() const {  // pre: nonzero
    mpq_class n = re * re + im * im;
    return {re / n, -im / n};
  }
  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }

  std::string to_string() const;
};

}  // namespace eml
