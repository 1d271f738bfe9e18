#pragma once

#include <gmpxx.h>

#include "eml/dyadic.hpp"

namespace eml {

// Closed real interval [lo, hi] with exact dyadic endpoints.
struct RealInterval {
  Dyadic lo, hi;

  RealInterval() = default;
  RealInterval(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {}
  static RealInterval point(const Dyadic& d) { return {d, d}; }
  static RealInterval point(long v) { return point(Dyadic(v)); }

  Dyadic width() const { return hi - lo; }
  Dyadic midpoint() const { return (lo + hi).mul_pow2(-1); }
  bool contains(const Dyadic& d) const { return lo <= d && d <= hi; }
  bool contains(const mpq_class& q) const;
  bool contains_interval(const RealInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool intersects(const RealInterval& o) const { return lo <= o.hi && o.lo <= hi; }
  bool is_valid() const { return lo <= hi; }

  RealInterval neg() const { return {-hi, -lo}; }
  RealInterval mul_pow2(long e) const { return {lo.mul_pow2(e), hi.mul_pow2(e)}; }
  // Endpoints outward-rounded to at most `bits` significant bits.
  RealInterval round_out(long bits) const { return {lo.round_down(bits), hi.round_up(bits)}; }
  RealInterval inflate(const Dyadic& eps) const { return {lo - eps, hi + eps}; }
  RealInterval hull(const RealInterval& o) const {
    return {lo <= o.lo ? lo : o.lo, hi >= o.hi ? hi : o.hi};
  }
};

RealInterval iv_add(const RealInterval& a, const RealInterval& b, long bits);
RealInterval iv_sub(const RealInterval& a, const RealInterval& b, long bits);
RealInterval iv_mul(const RealInterval& a, const RealInterval& b, long bits);
RealInterval iv_square(const RealInterval& a, long bits);

// Axis-aligned rectangle enclosing a complex value.
struct ComplexBox {
  RealInterval re, im;

  Dyadic width() const {
    Dyadic wr = re.width(), wi = im.width();
    return wr >= wi ? wr : wi;
  }
  bool contains(const Dyadic& x, const Dyadic& y) const {
    return re.contains(x) && im.contains(y);
  }
  bool contains(const mpq_class& x, const mpq_class& y) const {
    return re.contains(x) && im.contains(y);
  }
  bool contains_box(const ComplexBox& o) const {
    return re.contains_interval(o.re) && im.contains_interval(o.im);
  }
  bool intersects(const ComplexBox& o) const {
    return re.intersects(o.re) && im.intersects(o.im);
  }
  ComplexBox inflate(const Dyadic& eps) const { return {re.inflate(eps), im.inflate(eps)}; }
};

}  // namespace eml
