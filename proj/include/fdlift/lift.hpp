#pragma once

#include "fdlift/budget.hpp"
#include "fdlift/fejer.hpp"
#include "fdlift/weights.hpp"

namespace fdlift {

// T_a(z) = sum_{i<=M} a(i) phi_i(z) with certified tail
// |sum_{i>M} a(i) phi_i(z)| <= cosh(2 pi |Im z|) sum_{i>M} |a(i)|.
// mu*Lambda weights are rejected here (not absolutely summable); use
// renorm_lift_mu_lambda.
CertifiedValue lift_eval(const WeightSpec& w, complexd z, const TruncationBudget& b,
                         bool integer_fast = true);

// Arithmetic divisor-sum anchor sum_{d|n} a(d): the oracle for lift_eval at
// integers (no truncation, no trig).
complexd lift_integer(const WeightSpec& w, std::int64_t n);

// A(s) = sum a(n) n^{-s} with certified tail, in closed form where one
// exists (polylog / zeta / 1/zeta / L) and by direct summation otherwise.
CertifiedValue weight_dirichlet_series(const WeightSpec& w, complexd s, const TruncationBudget& b);

// Renormalized lift sum (mu*Lambda)(i) (phi_i(z) - phi_infty(z)); the tail
// estimate C(z) sum_{i>M} log i / i^2 is heuristic (the kernel-difference
// constant is calibrated by sampling i in {M/2..M} at the evaluation point).
CertifiedValue renorm_lift_mu_lambda(complexd z, const TruncationBudget& b,
                                     bool integer_fast = true);

// T^ren(z, s) = sum (phi_i(z) - phi_infty(z)) i^{-s} + phi_infty(z) zeta(s+2),
// Re s > -1; interpolates sigma_{-s}(n) at integers.
CertifiedValue two_var_lift(complexd z, complexd s, const TruncationBudget& b,
                            bool integer_fast = true);

// d/ds T^ren(z, s) at s = 0:
// -sum (phi_i(z) - phi_infty(z)) log i + phi_infty(z) zeta'(2).
CertifiedValue spectral_derivative_s0(complexd z, const TruncationBudget& b,
                                      bool integer_fast = true);

}  // namespace fdlift
