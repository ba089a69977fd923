#include "fdlift/lift.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fdlift/series.hpp"

namespace fdlift {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
}  // namespace

WeightSpec WeightSpec::geometric(double q, double scale, long start_index) {
  WeightSpec w;
  w.kind = WeightKind::geometric;
  w.q = q;
  w.scale = scale;
  w.start_index = start_index;
  w.validate();
  return w;
}

WeightSpec WeightSpec::power(double alpha) {
  WeightSpec w;
  w.kind = WeightKind::power;
  w.alpha = alpha;
  w.validate();
  return w;
}

WeightSpec WeightSpec::mobius_power(double alpha) {
  WeightSpec w;
  w.kind = WeightKind::mobius_power;
  w.alpha = alpha;
  w.validate();
  return w;
}

WeightSpec WeightSpec::character_power(CharacterTable chi, double alpha) {
  WeightSpec w;
  w.kind = WeightKind::character_power;
  w.chi = std::move(chi);
  w.alpha = alpha;
  w.validate();
  return w;
}

WeightSpec WeightSpec::mu_star_lambda() {
  WeightSpec w;
  w.kind = WeightKind::mu_star_lambda;
  return w;
}

WeightSpec WeightSpec::from_table(arith::ArithTable t) {
  WeightSpec w;
  w.kind = WeightKind::table;
  w.table = std::make_shared<arith::ArithTable>(std::move(t));
  return w;
}

void WeightSpec::validate() const {
  switch (kind) {
    case WeightKind::geometric:
      if (!(std::abs(q) > 1.0)) throw DomainError("WeightSpec: geometric weights need |q| > 1");
      break;
    case WeightKind::power:
    case WeightKind::mobius_power:
      if (!(alpha > 1.0)) throw DomainError("WeightSpec: power weights need alpha > 1");
      break;
    case WeightKind::character_power:
      if (!(alpha > 1.0)) throw DomainError("WeightSpec: power weights need alpha > 1");
      chi.validate();
      break;
    case WeightKind::table:
      if (!table) throw DomainError("WeightSpec: missing table");
      break;
    case WeightKind::mu_star_lambda:
      break;
  }
  if (start_index < 1) throw DomainError("WeightSpec: start_index must be >= 1");
}

std::vector<complexd> WeightSpec::coefficients(long M) const {
  std::vector<complexd> a(static_cast<std::size_t>(M) + 1, complexd(0.0));
  switch (kind) {
    case WeightKind::geometric: {
      const double inv = 1.0 / q;
      double w = std::pow(inv, static_cast<double>(start_index));
      for (long i = start_index; i <= M; ++i, w *= inv) a[static_cast<std::size_t>(i)] = scale * w;
      break;
    }
    case WeightKind::power:
      for (long i = start_index; i <= M; ++i)
        a[static_cast<std::size_t>(i)] = scale * std::pow(static_cast<double>(i), -alpha);
      break;
    case WeightKind::mobius_power: {
      const auto mu = arith::mobius_sieve(M);
      for (long i = start_index; i <= M; ++i)
        a[static_cast<std::size_t>(i)] =
            scale * static_cast<double>(mu[static_cast<std::size_t>(i)]) *
            std::pow(static_cast<double>(i), -alpha);
      break;
    }
    case WeightKind::character_power:
      for (long i = start_index; i <= M; ++i)
        a[static_cast<std::size_t>(i)] = scale * chi.at(i) * std::pow(static_cast<double>(i), -alpha);
      break;
    case WeightKind::mu_star_lambda: {
      const auto mu = arith::ArithTable::mobius(M);
      const auto lam = arith::ArithTable::von_mangoldt(M);
      const auto conv = arith::dirichlet_convolve(mu, lam, M);
      for (long i = 1; i <= M; ++i) a[static_cast<std::size_t>(i)] = conv.at(i);
      break;
    }
    case WeightKind::table:
      for (long i = start_index; i <= std::min(M, table->limit); ++i)
        a[static_cast<std::size_t>(i)] = table->at(i);
      break;
  }
  return a;
}

double WeightSpec::abs_tail(long M) const {
  const double Md = static_cast<double>(M);
  switch (kind) {
    case WeightKind::geometric: {
      const double x = 1.0 / std::abs(q);
      return std::abs(scale) * std::pow(x, Md + 1.0) / (1.0 - x);
    }
    case WeightKind::power:
    case WeightKind::mobius_power:
    case WeightKind::character_power:
      // integral bound for sum_{i>M} i^{-alpha}
      return std::abs(scale) * std::pow(Md, 1.0 - alpha) / (alpha - 1.0);
    case WeightKind::table:
      return (M >= table->limit) ? 0.0 : std::numeric_limits<double>::infinity();
    case WeightKind::mu_star_lambda:
      return std::numeric_limits<double>::infinity();
  }
  return std::numeric_limits<double>::infinity();
}

double WeightSpec::abscissa() const {
  switch (kind) {
    case WeightKind::geometric:
    case WeightKind::table:
      return -std::numeric_limits<double>::infinity();
    case WeightKind::power:
    case WeightKind::mobius_power:
    case WeightKind::character_power:
      return 1.0 - alpha;
    case WeightKind::mu_star_lambda:
      return 1.0;
  }
  return 1.0;
}

CertifiedValue lift_eval(const WeightSpec& w, complexd z, const TruncationBudget& b,
                         bool integer_fast) {
  w.validate();
  b.validate();
  if (!w.absolutely_summable())
    throw DomainError("lift_eval: mu*Lambda weights are not absolutely summable; use renorm_lift_mu_lambda");
  const double tail = std::cosh(2.0 * kPi * std::abs(z.imag())) * w.abs_tail(b.cutoff);
  if (tail > b.tail_tol) throw BudgetError(tail);

  const auto a = w.coefficients(b.cutoff);
  complexd sum = 0.0;
  double abs_terms = 0.0;

  if (integer_fast && near_integer(z)) {
    const auto n = nearest_integer(z.real());
    for (long i = std::max<long>(1, w.start_index); i <= b.cutoff; ++i) {
      if (n % i != 0) continue;
      sum += a[static_cast<std::size_t>(i)];
      abs_terms += std::abs(a[static_cast<std::size_t>(i)]);
    }
    return {sum, tail + 8.0 * kEps * abs_terms, false};
  }

  for (long i = std::max<long>(1, w.start_index); i <= b.cutoff; ++i) {
    const complexd ai = a[static_cast<std::size_t>(i)];
    if (ai == complexd(0.0)) continue;
    const complexd term = ai * (integer_fast ? phi(z, i) : phi_series(z, i));
    sum += term;
    abs_terms += std::abs(term);
  }
  return {sum, tail + 8.0 * kEps * abs_terms, false};
}

complexd lift_integer(const WeightSpec& w, std::int64_t n) {
  w.validate();
  if (n < 0) n = -n;
  if (n == 0) throw DomainError("lift_integer: n must be nonzero (divisor sum undefined at 0)");
  complexd sum = 0.0;
  const auto divs = arith::divisors(n);
  // table-backed kinds need coefficients only up to n
  const auto a = w.coefficients(n);
  for (std::int64_t d : divs)
    if (d >= w.start_index) sum += a[static_cast<std::size_t>(d)];
  return sum;
}

CertifiedValue weight_dirichlet_series(const WeightSpec& w, complexd s, const TruncationBudget& b) {
  w.validate();
  if (s.real() <= w.abscissa())
    throw DomainError("weight_dirichlet_series: s outside the absolute-convergence half-plane");
  switch (w.kind) {
    case WeightKind::geometric: {
      CertifiedValue li = polylog(s, complexd(1.0 / w.q, 0.0), b);
      complexd head = 0.0;  // subtract i < start_index terms of the polylog
      for (long i = 1; i < w.start_index; ++i)
        head += std::pow(1.0 / w.q, static_cast<double>(i)) *
                std::exp(-s * std::log(static_cast<double>(i)));
      return {w.scale * (li.value - head), std::abs(w.scale) * li.tail_bound, false};
    }
    case WeightKind::power: {
      CertifiedValue zt = zeta(s + w.alpha, b);
      return {w.scale * zt.value, std::abs(w.scale) * zt.tail_bound, false};
    }
    case WeightKind::mobius_power: {
      // 1/zeta(s+alpha) with |1/z - 1/z~| <= tail/(|z~|(|z~|-tail))
      CertifiedValue zt = zeta(s + w.alpha, b);
      const double zm = std::abs(zt.value);
      const double tail = zt.tail_bound / (zm * std::max(zm - zt.tail_bound, 1e-300));
      return {w.scale / zt.value, std::abs(w.scale) * tail, false};
    }
    case WeightKind::character_power: {
      CertifiedValue L = dirichlet_L(s + w.alpha, w.chi, b);
      return {w.scale * L.value, std::abs(w.scale) * L.tail_bound, false};
    }
    case WeightKind::mu_star_lambda: {
      // direct summation with the integral bound for sum_{n>M} log n n^{-sigma}
      const double sigma = s.real();
      long M = std::max<long>(b.cutoff, 64);
      auto tail_at = [&](double N) {
        return std::pow(N, 1.0 - sigma) *
               (std::log(N) / (sigma - 1.0) + 1.0 / ((sigma - 1.0) * (sigma - 1.0)));
      };
      const long cap = 4000000;
      while (tail_at(static_cast<double>(M)) > b.tail_tol && M < cap) M *= 2;
      const double tail = tail_at(static_cast<double>(M));
      if (tail > b.tail_tol) throw BudgetError(tail);
      const auto a = w.coefficients(M);
      complexd sum = 0.0;
      double abs_terms = 0.0;
      for (long n = 1; n <= M; ++n) {
        if (a[static_cast<std::size_t>(n)] == complexd(0.0)) continue;
        const complexd t = a[static_cast<std::size_t>(n)] * std::exp(-s * std::log(static_cast<double>(n)));
        sum += t;
        abs_terms += std::abs(t);
      }
      return {sum, tail + 8.0 * kEps * abs_terms, false};
    }
    case WeightKind::table: {
      complexd sum = 0.0;
      double abs_terms = 0.0;
      for (long n = std::max<long>(1, w.start_index); n <= w.table->limit; ++n) {
        const complexd t = w.table->at(n) * std::exp(-s * std::log(static_cast<double>(n)));
        sum += t;
        abs_terms += std::abs(t);
      }
      return {sum, 8.0 * kEps * abs_terms, false};
    }
  }
  throw DomainError("weight_dirichlet_series: unknown weight kind");
}

namespace {

// max_i i^2 |phi_i(z) - phi_infty(z)| sampled over i in {M/2..M}; the paper
// gives O_R(i^{-2}) without a numeric constant, so the bound is heuristic.
double kernel_difference_constant(complexd z, long M) {
  double c = 0.0;
  const complexd pinf = phi_infty(z);
  for (long i = std::max<long>(2, M / 2); i <= M; i += std::max<long>(1, M / 16)) {
    const double diff = std::abs(phi_series(z, i) - pinf);
    c = std::max(c, diff * static_cast<double>(i) * static_cast<double>(i));
  }
  return c;
}

}  // namespace

CertifiedValue renorm_lift_mu_lambda(complexd z, const TruncationBudget& b, bool integer_fast) {
  b.validate();
  const long M = b.cutoff;
  WeightSpec w = WeightSpec::mu_star_lambda();
  const auto a = w.coefficients(M);
  const bool at_integer = integer_fast && near_integer(z);
  const complexd pinf = at_integer ? complexd(0.0) : phi_infty(z);
  const std::int64_t n = at_integer ? nearest_integer(z.real()) : 0;

  complexd sum = 0.0;
  double abs_terms = 0.0;
  for (long i = 1; i <= M; ++i) {
    const complexd ai = a[static_cast<std::size_t>(i)];
    if (ai == complexd(0.0)) continue;
    complexd kernel;
    if (at_integer) {
      kernel = (n % i == 0) ? complexd(1.0) : complexd(0.0);
    } else {
      kernel = (integer_fast ? phi(z, i) : phi_series(z, i)) - pinf;
    }
    const complexd term = ai * kernel;
    sum += term;
    // cosine-branch roundoff grows ~ i*eps; fold it into the allowance
    abs_terms += std::abs(ai) * (std::abs(kernel) * 8.0 + static_cast<double>(i) * 1e-2);
  }
  // heuristic series tail: C(z) * sum_{i>M} log i / i^2 <= C(z)(log M + 1)/M
  const double c = kernel_difference_constant(z, M);
  const double tail = c * (std::log(static_cast<double>(M)) + 1.0) / static_cast<double>(M);
  return {sum, tail + kEps * abs_terms, true};
}

CertifiedValue two_var_lift(complexd z, complexd s, const TruncationBudget& b, bool integer_fast) {
  b.validate();
  if (!(s.real() > -1.0)) throw DomainError("two_var_lift: Re s must be > -1");
  const long M = b.cutoff;
  const bool at_integer = integer_fast && near_integer(z);
  const complexd pinf = at_integer ? complexd(0.0) : phi_infty(z);
  const std::int64_t n = at_integer ? nearest_integer(z.real()) : 0;

  complexd sum = 0.0;
  double abs_terms = 0.0;
  for (long i = 1; i <= M; ++i) {
    complexd kernel;
    if (at_integer) {
      kernel = (n % i == 0) ? complexd(1.0) : complexd(0.0);
      if (kernel == complexd(0.0)) continue;
    } else {
      kernel = (integer_fast ? phi(z, i) : phi_series(z, i)) - pinf;
    }
    const complexd term = kernel * std::exp(-s * std::log(static_cast<double>(i)));
    sum += term;
    abs_terms += std::abs(term) * 8.0;
  }

  double tail;
  if (at_integer) {
    tail = 0.0;  // kernel difference vanishes identically at integers beyond n
  } else {
    const double c = kernel_difference_constant(z, M);
    const double sigma1 = s.real() + 1.0;
    tail = c * std::pow(static_cast<double>(M), -sigma1) / sigma1;
  }

  TruncationBudget zb = b;
  zb.tail_tol = std::max(b.tail_tol, 1e-12);
  CertifiedValue zf = zeta(s + 2.0, zb);
  sum += pinf * zf.value;
  return {sum, tail + std::abs(pinf) * zf.tail_bound + kEps * abs_terms, true};
}

CertifiedValue spectral_derivative_s0(complexd z, const TruncationBudget& b, bool integer_fast) {
  b.validate();
  const long M = b.cutoff;
  const bool at_integer = integer_fast && near_integer(z);
  const complexd pinf = at_integer ? complexd(0.0) : phi_infty(z);
  const std::int64_t n = at_integer ? nearest_integer(z.real()) : 0;

  complexd sum = 0.0;
  double abs_terms = 0.0;
  for (long i = 2; i <= M; ++i) {
    complexd kernel;
    if (at_integer) {
      kernel = (n % i == 0) ? complexd(1.0) : complexd(0.0);
      if (kernel == complexd(0.0)) continue;
    } else {
      kernel = (integer_fast ? phi(z, i) : phi_series(z, i)) - pinf;
    }
    const complexd term = -kernel * std::log(static_cast<double>(i));
    sum += term;
    abs_terms += std::abs(term) * 8.0 + static_cast<double>(i) * 1e-2 * std::abs(kernel);
  }

  double tail;
  if (at_integer) {
    tail = 0.0;
  } else {
    const double c = kernel_difference_constant(z, M);
    tail = c * (std::log(static_cast<double>(M)) + 1.0) / static_cast<double>(M);
  }

  if (pinf != complexd(0.0)) {
    TruncationBudget db = b;
    db.tail_tol = std::max(b.tail_tol, 1e-6);
    CertifiedValue zd = zeta_deriv(complexd(2.0, 0.0), db);
    sum += pinf * zd.value;
    tail += std::abs(pinf) * zd.tail_bound;
  }
  return {sum, tail + kEps * abs_terms, true};
}

}  // namespace fdlift
