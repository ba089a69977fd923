#pragma once

// Real-axis evaluators for the geometric-weight indicator, templated on the
// floating type so the companion-zero machinery can run in double, quad, or
// decimal-50/100 precision as the displacement q^{-p} demands.

#include "fdlift/fejer.hpp"

namespace fdlift {

// sum_{i=2}^{M} q^{-i} phi_i(x)
template <class R>
R sq_partial(R x, double q, long M, bool integer_fast = false) {
  const R inv = R(1) / R(q);
  R weight = inv, sum = R(0);
  for (long i = 2; i <= M; ++i) {
    weight *= inv;
    sum += weight * phi_real(x, i, integer_fast);
  }
  return sum;
}

template <class R>
R sq_partial_deriv(R x, double q, long M) {
  const R inv = R(1) / R(q);
  R weight = inv, sum = R(0);
  for (long i = 2; i <= M; ++i) {
    weight *= inv;
    sum += weight * phi_real_deriv1(x, i, false);
  }
  return sum;
}

// H(x) = S_q(x) - q^{-x}: the indicator divided by its (q-1)q prefactor.
template <class R>
R indicator_core(R x, double q, long M) {
  return sq_partial(x, q, M) - exp(-x * log(R(q)));
}

template <class R>
R indicator_core_deriv(R x, double q, long M) {
  const R lq = log(R(q));
  return sq_partial_deriv(x, q, M) + lq * exp(-x * lq);
}

template <class R>
R indicator_real(R x, double q, long M) {
  return R(q - 1) * R(q) * indicator_core(x, q, M);
}

template <class R>
R fsharp_real(R x, double q, long M) {
  const R lq = log(R(q));
  const R two_pi = 2 * pi_const<R>();
  const R s1 = sin(two_pi * x) / two_pi;
  const R corrector = exp(-x * lq) * (1 + lq * s1);
  return R(q - 1) * R(q) * (sq_partial(x, q, M) - corrector);
}

}  // namespace fdlift
