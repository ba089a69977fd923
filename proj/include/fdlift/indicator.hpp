#pragma once

#include <functional>
#include <numbers>
#include <vector>

#include "fdlift/budget.hpp"
#include "fdlift/fejer.hpp"

namespace fdlift {

enum class Regime { real_gt1, alternating_minus1, real_lt_minus1, complex_abs_gt1 };

// Parameter q plus the evaluation regime.  q = -1 series are Abel-damped by
// the stored r; every other regime needs |q| > 1.  Integer-argument
// evaluation is exact in all regimes and for |q| = 1 (finite divisor sums).
struct RegimeQ {
  Regime regime = Regime::real_gt1;
  complexd q{2.0, 0.0};
  double abel_r = 0.999;

  static RegimeQ real(double q);                       // dispatches on sign/size
  static RegimeQ complex_q(complexd q);                // |q| > 1
  static RegimeQ alternating(double r = 0.999);        // q = -1, damped
  void validate() const;
  complexd log_q() const;                              // principal branch
  complexd prefactor() const { return (q - 1.0) * q; }
};

struct IndicatorValue {
  complexd value{0.0, 0.0};
  double tail_bound = 0.0;
  enum class Path { series, integer_exact } path = Path::series;
};

// S_q(z) = sum_{i>=2} q^{-i} phi_i(z), certified geometric tail.
CertifiedValue s_q(complexd z, const RegimeQ& rq, const TruncationBudget& b,
                   bool integer_fast = true);

// F(z,q) = (q-1) q (S_q(z) - q^{-z}); corrector on the principal branch,
// damped form 2 S_r(z) - 2 e^{-i pi z} in the alternating regime.
IndicatorValue indicator_F(complexd z, const RegimeQ& rq, const TruncationBudget& b,
                           bool integer_fast = true);

// Tangent-matched variant: corrector multiplied by (1 + log(q) S1(z)),
// S1(z) = sin(2 pi z)/(2 pi); at q = -1 the damped corrector is
// 2 e^{-i pi z} (1 + i pi S1(z)).
IndicatorValue indicator_Fsharp(complexd z, const RegimeQ& rq, const TruncationBudget& b,
                                bool integer_fast = true);

// Exact divisor-sum evaluation (q-1) q sum_{d|n, 2<=d<n} q^{-d}; the oracle
// for both series paths at integers.  Valid for any q with |q| >= 1, q != 1.
complexd indicator_integer(std::int64_t n, complexd q);
complexd indicator_integer(std::int64_t n, const RegimeQ& rq);

// q-analogs (no (q-1) q prefactor).
CertifiedValue q_analog_tau(complexd z, double q, const TruncationBudget& b,
                            bool integer_fast = true);
CertifiedValue q_analog_sigma(complexd z, double q, const TruncationBudget& b,
                              bool integer_fast = true);

// Richardson extrapolation of r -> f(r) as r increases to 1 along r_grid.
struct AbelResult {
  complexd value{0.0, 0.0};
  double convergence_estimate = 0.0;
};
AbelResult abel_extrapolate(const std::function<complexd(double)>& f,
                            const std::vector<double>& r_grid = {0.9, 0.99, 0.999, 0.9999});

// sin(theta x)(1 + ln R * S1(x)) - cos(theta x) * theta * S1(x) for
// q = R e^{i theta}; vanishes exactly when the phase condition holds.
double phase_locking_residual(double x, complexd q);

inline double s1_normalizer(double x) {
  return std::sin(2.0 * std::numbers::pi * x) / (2.0 * std::numbers::pi);
}
inline complexd s1_normalizer(complexd z) {
  return std::sin(2.0 * std::numbers::pi * z) / (2.0 * std::numbers::pi);
}

}  // namespace fdlift
