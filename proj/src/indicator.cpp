#include "fdlift/indicator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fdlift/arith.hpp"

namespace fdlift {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
}  // namespace

RegimeQ RegimeQ::real(double q) {
  RegimeQ rq;
  rq.q = complexd(q, 0.0);
  if (q > 1.0) {
    rq.regime = Regime::real_gt1;
  } else if (q == -1.0) {
    rq.regime = Regime::alternating_minus1;
  } else if (q < -1.0) {
    rq.regime = Regime::real_lt_minus1;
  } else {
    throw DomainError("RegimeQ: real q must satisfy q > 1 or q <= -1");
  }
  return rq;
}

RegimeQ RegimeQ::complex_q(complexd q) {
  RegimeQ rq;
  rq.regime = Regime::complex_abs_gt1;
  rq.q = q;
  rq.validate();
  return rq;
}

RegimeQ RegimeQ::alternating(double r) {
  RegimeQ rq;
  rq.regime = Regime::alternating_minus1;
  rq.q = complexd(-1.0, 0.0);
  rq.abel_r = r;
  rq.validate();
  return rq;
}

void RegimeQ::validate() const {
  switch (regime) {
    case Regime::real_gt1:
      if (!(q.imag() == 0.0 && q.real() > 1.0)) throw DomainError("RegimeQ: real_gt1 needs real q > 1");
      break;
    case Regime::real_lt_minus1:
      if (!(q.imag() == 0.0 && q.real() < -1.0))
        throw DomainError("RegimeQ: real_lt_minus1 needs real q < -1");
      break;
    case Regime::alternating_minus1:
      if (q != complexd(-1.0, 0.0)) throw DomainError("RegimeQ: alternating regime fixes q = -1");
      if (!(abel_r > 0.0 && abel_r < 1.0)) throw DomainError("RegimeQ: damping r must be in (0,1)");
      break;
    case Regime::complex_abs_gt1:
      if (!(std::abs(q) > 1.0)) throw DomainError("RegimeQ: complex regime needs |q| > 1");
      break;
  }
}

complexd RegimeQ::log_q() const { return std::log(q); }  // principal branch

namespace {

// Shared truncated kernel sum: sum_{i=2}^{M} w_i phi_i(z) with w_i the
// regime weights, plus the cosh(2 pi |Im z|)-scaled geometric tail bound.
CertifiedValue weighted_kernel_sum(complexd z, const RegimeQ& rq, const TruncationBudget& b,
                                   bool integer_fast) {
  rq.validate();
  b.validate();
  const bool damped = rq.regime == Regime::alternating_minus1;
  const double ratio = damped ? rq.abel_r : 1.0 / std::abs(rq.q);

  const double tail_geom = std::pow(ratio, static_cast<double>(b.cutoff) + 1.0) / (1.0 - ratio);
  const double tail = std::cosh(2.0 * kPi * std::abs(z.imag())) * tail_geom;
  if (tail > b.tail_tol) throw BudgetError(tail);

  const complexd step = damped ? complexd(-rq.abel_r, 0.0) : 1.0 / rq.q;
  complexd weight = step;  // step^1
  complexd sum = 0.0;
  double abs_terms = 0.0;
  for (long i = 2; i <= b.cutoff; ++i) {
    weight *= step;  // step^i
    const complexd term = weight * (integer_fast ? phi(z, i) : phi_series(z, i));
    sum += term;
    abs_terms += std::abs(term);
  }
  return {sum, tail + kEps * 8.0 * abs_terms, false};
}

complexd corrector_base(complexd z, const RegimeQ& rq) {
  if (rq.regime == Regime::alternating_minus1)
    return std::exp(complexd(0.0, -kPi) * z);  // e^{-i pi z}
  return std::exp(-z * rq.log_q());            // q^{-z}, principal branch
}

}  // namespace

CertifiedValue s_q(complexd z, const RegimeQ& rq, const TruncationBudget& b, bool integer_fast) {
  CertifiedValue kernel = weighted_kernel_sum(z, rq, b, integer_fast);
  if (rq.regime == Regime::alternating_minus1) {
    kernel.value *= 2.0;
    kernel.tail_bound *= 2.0;
  }
  return kernel;
}

IndicatorValue indicator_F(complexd z, const RegimeQ& rq, const TruncationBudget& b,
                           bool integer_fast) {
  if (integer_fast && near_integer(z) && nearest_integer(z.real()) >= 2) {
    return {indicator_integer(nearest_integer(z.real()), rq), 0.0, IndicatorValue::Path::integer_exact};
  }
  CertifiedValue kernel = weighted_kernel_sum(z, rq, b, integer_fast);
  IndicatorValue out;
  out.path = IndicatorValue::Path::series;
  if (rq.regime == Regime::alternating_minus1) {
    out.value = 2.0 * kernel.value - 2.0 * corrector_base(z, rq);
    out.tail_bound = 2.0 * kernel.tail_bound;
    return out;
  }
  const complexd pref = rq.prefactor();
  out.value = pref * (kernel.value - corrector_base(z, rq));
  out.tail_bound = std::abs(pref) * kernel.tail_bound;
  return out;
}

IndicatorValue indicator_Fsharp(complexd z, const RegimeQ& rq, const TruncationBudget& b,
                                bool integer_fast) {
  if (integer_fast && near_integer(z) && nearest_integer(z.real()) >= 2) {
    // S1 vanishes at integers: the sharp and plain indicators coincide there
    return {indicator_integer(nearest_integer(z.real()), rq), 0.0, IndicatorValue::Path::integer_exact};
  }
  CertifiedValue kernel = weighted_kernel_sum(z, rq, b, integer_fast);
  const complexd matched = corrector_base(z, rq) * (1.0 + rq.log_q() * s1_normalizer(z));
  IndicatorValue out;
  out.path = IndicatorValue::Path::series;
  if (rq.regime == Regime::alternating_minus1) {
    out.value = 2.0 * kernel.value - 2.0 * matched;
    out.tail_bound = 2.0 * kernel.tail_bound;
    return out;
  }
  const complexd pref = rq.prefactor();
  out.value = pref * (kernel.value - matched);
  out.tail_bound = std::abs(pref) * kernel.tail_bound;
  return out;
}

complexd indicator_integer(std::int64_t n, complexd q) {
  if (n < 2) throw DomainError("indicator_integer: n must be >= 2");
  if (!(std::abs(q) >= 1.0) || q == complexd(1.0, 0.0))
    throw DomainError("indicator_integer: need |q| >= 1 and q != 1");
  if (q.imag() == 0.0) {
    // real arithmetic keeps the integer anchors exact (q = -1 in particular:
    // the terms are exactly +-1 and zeros of the classification are exact)
    const double qr = q.real();
    const double mag = std::abs(1.0 / qr);
    double sum = 0.0;
    for (std::int64_t d : arith::divisors(n)) {
      if (d < 2 || d >= n) continue;
      const double term = std::pow(mag, static_cast<double>(d));
      sum += (qr < 0.0 && d % 2 != 0) ? -term : term;
    }
    return complexd((qr - 1.0) * qr * sum, 0.0);
  }
  const complexd inv = 1.0 / q;
  complexd sum = 0.0;
  for (std::int64_t d : arith::divisors(n)) {
    if (d < 2 || d >= n) continue;
    sum += std::pow(inv, static_cast<double>(d));
  }
  return (q - 1.0) * q * sum;
}

complexd indicator_integer(std::int64_t n, const RegimeQ& rq) {
  rq.validate();
  return indicator_integer(n, rq.q);
}

namespace {

// Kernel sum with weights q^{-i} F(z,i)/i^p for the q-analogs (p = 2 or 1).
CertifiedValue analog_sum(complexd z, double q, int denom_power, const TruncationBudget& b,
                          bool integer_fast) {
  if (!(q > 1.0)) throw DomainError("q-analog: q must be > 1");
  b.validate();
  const double x = 1.0 / q;
  const double M = static_cast<double>(b.cutoff);
  // tail of sum i^{2-p} q^{-i}: geometric for p=2, i*q^{-i} closed form for p=1
  double tail_geom;
  if (denom_power == 2) {
    tail_geom = std::pow(x, M + 1.0) / (1.0 - x);
  } else {
    tail_geom = std::pow(x, M + 1.0) * ((M + 1.0) - M * x) / ((1.0 - x) * (1.0 - x));
  }
  const double tail = std::cosh(2.0 * kPi * std::abs(z.imag())) * tail_geom;
  if (tail > b.tail_tol) throw BudgetError(tail);

  complexd sum = 0.0;
  double weight = x, abs_terms = 0.0;
  for (long i = 2; i <= b.cutoff; ++i) {
    weight *= x;  // q^{-i}
    const complexd kernel = integer_fast ? phi(z, i) : phi_series(z, i);
    const complexd term = weight * kernel * ((denom_power == 2) ? 1.0 : static_cast<double>(i));
    sum += term;
    abs_terms += std::abs(term);
  }
  return {sum, tail + kEps * 8.0 * abs_terms, false};
}

}  // namespace

CertifiedValue q_analog_tau(complexd z, double q, const TruncationBudget& b, bool integer_fast) {
  if (integer_fast && near_integer(z) && nearest_integer(z.real()) >= 2) {
    const auto n = nearest_integer(z.real());
    complexd sum = 0.0;
    for (std::int64_t d : arith::divisors(n))
      if (d >= 2 && d < n) sum += std::pow(1.0 / q, static_cast<double>(d));
    return {sum, 0.0, false};
  }
  CertifiedValue s = analog_sum(z, q, 2, b, integer_fast);
  s.value -= std::exp(-z * std::log(complexd(q, 0.0)));
  return s;
}

CertifiedValue q_analog_sigma(complexd z, double q, const TruncationBudget& b, bool integer_fast) {
  if (integer_fast && near_integer(z) && nearest_integer(z.real()) >= 2) {
    const auto n = nearest_integer(z.real());
    complexd sum = 0.0;
    for (std::int64_t d : arith::divisors(n))
      if (d >= 2 && d < n) sum += static_cast<double>(d) * std::pow(1.0 / q, static_cast<double>(d));
    return {sum, 0.0, false};
  }
  CertifiedValue s = analog_sum(z, q, 1, b, integer_fast);
  s.value -= z * std::exp(-z * std::log(complexd(q, 0.0)));
  return s;
}

AbelResult abel_extrapolate(const std::function<complexd(double)>& f,
                            const std::vector<double>& r_grid) {
  if (r_grid.size() < 2) throw DomainError("abel_extrapolate: need at least two grid points");
  const std::size_t n = r_grid.size();
  // Neville tableau in the variable eps = 1 - r (polynomial model in eps)
  std::vector<complexd> row(n);
  std::vector<double> eps(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!(r_grid[k] > 0.0 && r_grid[k] < 1.0) || (k > 0 && r_grid[k] <= r_grid[k - 1]))
      throw DomainError("abel_extrapolate: r_grid must increase inside (0,1)");
    row[k] = f(r_grid[k]);
    eps[k] = 1.0 - r_grid[k];
  }
  double prev_delta = std::numeric_limits<double>::infinity();
  complexd prev_last = row[0];
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t k = n - 1; k >= level; --k) {
      row[k] = row[k] + (row[k] - row[k - 1]) * eps[k] / (eps[k - level] - eps[k]);
      if (k == level) break;
    }
    const double delta = std::abs(row[n - 1] - prev_last);
    if (level >= 2 && delta > prev_delta * 4.0 && delta > 1e-12)
      throw DomainError("abel_extrapolate: no convergence (residuals not decreasing)");
    prev_delta = delta;
    prev_last = row[n - 1];
  }
  return {row[n - 1], prev_delta};
}

double phase_locking_residual(double x, complexd q) {
  const double R = std::abs(q);
  if (!(R > 0.0)) throw DomainError("phase_locking_residual: q must be nonzero");
  const double theta = std::arg(q);
  const double s1 = s1_normalizer(x);
  return std::sin(theta * x) * (1.0 + std::log(R) * s1) - std::cos(theta * x) * theta * s1;
}

}  // namespace fdlift
