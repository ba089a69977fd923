#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

#include "fdlift/budget.hpp"

namespace fdlift {

// Branch switch: below this |sin(pi z / i)| the squared sine quotient is
// evaluated through the finite cosine sum, which has no pole to cancel.
inline constexpr double kNearPoleSwitch = 1e-6;
// Arguments within this distance of an integer take the exact integer path.
inline constexpr double kIntegerTol = 1e-12;

inline bool near_integer(double x) { return std::abs(x - std::round(x)) <= kIntegerTol; }
inline bool near_integer(complexd z) {
  return std::abs(z.imag()) <= kIntegerTol && near_integer(z.real());
}
inline std::int64_t nearest_integer(double x) { return static_cast<std::int64_t>(std::llround(x)); }

// ---------------------------------------------------------------------------
// Templated real-axis core. R is any floating type with the usual <cmath>
// surface (double, boost float128, cpp_bin_float).  F(x,1) := 1.
// ---------------------------------------------------------------------------

template <class R>
R pi_const() {
  static const R value = acos(R(-1));
  return value;
}

// F(x,i) = i + 2 sum_{k<i} (i-k) cos(2 pi k x / i): exact everywhere.
template <class R>
R fejer_cosine_real(R x, long i) {
  if (i == 1) return R(1);
  const R w = 2 * pi_const<R>() * x / R(i);
  R sum = R(i);
  for (long k = 1; k < i; ++k) sum += 2 * R(i - k) * cos(R(k) * w);
  return sum;
}

template <class R>
R fejer_quotient_real(R x, long i) {
  if (i == 1) return R(1);
  const R num = sin(pi_const<R>() * x);
  const R den = sin(pi_const<R>() * x / R(i));
  const R r = num / den;
  return r * r;
}

template <class R>
R fejer_real(R x, long i) {
  if (i == 1) return R(1);
  const R den = sin(pi_const<R>() * x / R(i));
  if (abs(den) < R(kNearPoleSwitch)) return fejer_cosine_real(x, i);
  const R num = sin(pi_const<R>() * x);
  const R r = num / den;
  return r * r;
}

// phi_i = F(.,i)/i^2; divisor indicator at integers via the exact fast path.
template <class R>
R phi_real(R x, long i, bool integer_fast = true) {
  if (integer_fast) {
    const double xd = static_cast<double>(x);
    if (std::abs(xd - std::round(xd)) <= kIntegerTol && abs(x - R(std::round(xd))) <= R(kIntegerTol)) {
      const auto n = nearest_integer(xd);
      return (n % i == 0) ? R(1) : R(0);
    }
  }
  return fejer_real(x, i) / (R(i) * R(i));
}

// d/dx phi_i on the real axis (quotient rule off poles, cosine sum near them).
template <class R>
R phi_real_deriv1(R x, long i, bool integer_fast = true) {
  if (i == 1) return R(0);
  const R pi = pi_const<R>();
  if (integer_fast) {
    const double xd = static_cast<double>(x);
    if (std::abs(xd - std::round(xd)) <= kIntegerTol && abs(x - R(std::round(xd))) <= R(kIntegerTol))
      return R(0);  // every phi_i has a critical point at each integer
  }
  const R c = pi / R(i);
  const R den = sin(c * x);
  if (abs(den) < R(kNearPoleSwitch)) {
    // derivative of the cosine sum
    const R w = 2 * pi / R(i);
    R sum = R(0);
    for (long k = 1; k < i; ++k) sum -= 2 * R(i - k) * (R(k) * w) * sin(R(k) * w * x);
    return sum / (R(i) * R(i));
  }
  const R s = sin(pi * x), sc = cos(pi * x);
  const R co = cos(c * x);
  const R ii = R(i) * R(i);
  // phi = s^2 / (i^2 den^2)
  return (2 * pi * s * sc / (den * den) - 2 * c * s * s * co / (den * den * den)) / ii;
}

template <class R>
R phi_infty_real(R x) {
  const R w = pi_const<R>() * x;
  if (abs(w) < R(1e-4)) {
    const R y = w * w;
    return 1 - y / 3 + 2 * y * y / 45 - y * y * y / 315;
  }
  const R r = sin(w) / w;
  return r * r;
}

// ---------------------------------------------------------------------------
// Complex-plane API (double precision).
// ---------------------------------------------------------------------------

complexd fejer_F_cosine(complexd z, long i);
complexd fejer_F_quotient(complexd z, long i);
complexd fejer_F(complexd z, long i);  // branch switch + integer fast path

complexd phi(complexd z, long i);         // integer fast path wired in
complexd phi_series(complexd z, long i);  // pure series/trig evaluation
complexd phi_infty(complexd z);

// k-th derivative of phi_i at real x, k <= 3.  Integer arguments use the
// closed forms (k=1 -> 0; k=2 -> 2 pi^2/(i^2 sin^2(pi x/i)) resp.
// -(2 pi^2/3)(1 - 1/i^2)); elsewhere the sine quotient is differentiated
// analytically with the usual near-pole switch to the cosine sum.
double phi_deriv(double x, long i, int k);
// Cross-check path: derivative of the finite cosine sum, exact everywhere.
double phi_deriv_cosine(double x, long i, int k);

}  // namespace fdlift
