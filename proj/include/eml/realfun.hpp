#pragma once

#include <stdexcept>
#include <utility>

#include "eml/gaussian.hpp"
#include "eml/interval.hpp"

// Rigorous enclosures of the elementary real functions on exact dyadics,
// plus the complex box operations built from them. Every function returns an
// interval guaranteed to contain the true value; series are evaluated in
// fixed-point integer arithmetic with explicit ulp accounting and explicit
// tail bounds. `bits` is the target working precision: enclosures converge
// at rate ~2^-bits as bits grows (soundness never depends on it).

namespace eml {

struct CutViolation : std::runtime_error {
  CutViolation() : std::runtime_error("log argument box touches the branch cut or zero") {}
};

struct OverflowGuard : std::runtime_error {
  explicit OverflowGuard(const std::string& what) : std::runtime_error(what) {}
};

// Cached constants (deterministic per `bits`).
RealInterval pi_interval(long bits);
RealInterval ln2_interval(long bits);
RealInterval e_interval(long bits);

// e^x for exact dyadic x.
RealInterval exp_point(const Dyadic& x, long bits);
// ln x for exact dyadic x > 0.
RealInterval ln_point(const Dyadic& x, long bits);
// ln over an interval with lo > 0.
RealInterval ln_interval(const RealInterval& x, long bits);
// e^ over an interval.
RealInterval exp_interval(const RealInterval& x, long bits);
// principal atan2(y, x); pre: not (y == 0 and x <= 0).
RealInterval atan2_point(const Dyadic& y, const Dyadic& x, long bits);
// simultaneous sin/cos range over an interval (any width; sound fallback [-1,1]).
std::pair<RealInterval, RealInterval> sin_cos_interval(const RealInterval& theta, long bits);
// ln q for exact rational q > 0.
RealInterval ln_rational(const mpq_class& q, long bits);

// Exact-rational comparisons against the transcendental constants
// (terminate because rationals never equal e or e^e).
bool rational_greater_than_e(const mpq_class& q);
bool rational_greater_than_e_to_e(const mpq_class& q);
bool rational_abs_im_less_than_pi(const mpq_class& im);

// ---- complex boxes ----

ComplexBox point_box(const GaussianRational& q, long bits);
ComplexBox box_add(const ComplexBox& a, const ComplexBox& b, long bits);
ComplexBox box_sub(const ComplexBox& a, const ComplexBox& b, long bits);
ComplexBox box_mul(const ComplexBox& a, const ComplexBox& b, long bits);

// exp over a box; throws OverflowGuard when re.hi > 2^20.
ComplexBox box_exp(const ComplexBox& a, long bits);

// The effective branch-cut test: the box avoids 0 and (-inf, 0].
bool cut_distance_positive(const ComplexBox& b);

// principal log over a box; throws CutViolation unless cut_distance_positive.
ComplexBox box_log(const ComplexBox& b, long bits);

// Case-1 log on the cut: pre: q.im == 0 and q.re < 0; returns ln|q| + i*pi.
ComplexBox box_log_negative_real(const GaussianRational& q, long bits);

}  // namespace eml
