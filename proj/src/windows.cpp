#include "fdlift/windows.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/float128.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fdlift/arith.hpp"
#include "fdlift/real_axis.hpp"
#include "fdlift/series.hpp"

namespace fdlift {

namespace {
constexpr double kPi = std::numbers::pi;

using boost::multiprecision::cpp_bin_float_100;
using boost::multiprecision::cpp_bin_float_50;
using boost::multiprecision::float128;
}  // namespace

WindowConstants compute_constants(double q, int digits) {
  if (!(q > 1.0)) throw DomainError("compute_constants: q must be > 1");
  WindowConstants c;
  c.q = q;
  const double lam = std::log(q);

  TruncationBudget sb;
  sb.cutoff = 256;
  sb.tail_tol = 1e-15;
  sb.digits = std::max(15, digits);
  c.Sigma = polylog(complexd(2.0, 0.0), complexd(1.0 / q, 0.0), sb).value.real() - 1.0 / q;

  c.LambdaSin = 1.0 + lam / (2.0 * kPi);

  const double pi2 = kPi * kPi;
  c.CprimeSin = 0.5 * (pi2 / 2.0 * std::pow(q, -2.0) + 8.0 * pi2 / 27.0 * std::pow(q, -3.0) +
                       pi2 / 4.0 * std::pow(q, -4.0) -
                       (2.0 * pi2 / 3.0 + lam * lam) * std::pow(q, -5.0));
  c.CdblprimeSin = 0.5 * (pi2 / 2.0 * std::pow(q, -2.0) + 8.0 * pi2 / 27.0 * std::pow(q, -3.0) +
                          pi2 / 4.0 * std::pow(q, -4.0) + pi2 / 2.0 * std::pow(q, -5.0) +
                          pi2 / 2.0 * std::pow(q, -6.0)) +
                   pi2 / 4.0 * std::pow(q, -7.0) / (1.0 - 1.0 / q);
  c.K0 = 0.5 * c.CprimeSin;

  const double pi3 = pi2 * kPi;
  c.C3tot = 4.0 * pi3 * std::pow(q, -2.0) / (1.0 - 1.0 / q) +
            lam * lam * lam * (4.0 + lam / (2.0 * kPi)) + 6.0 * kPi * lam * lam + 4.0 * pi2 * lam;
  c.deltaSin = std::min(1.0, 3.0 * c.K0 / c.C3tot);
  c.alpha = std::min(0.25, c.deltaSin / 2.0);
  c.P0 = threshold_P0(q, c.alpha);
  return c;
}

double threshold_P0(double q, double alpha) {
  if (!(q > 1.0)) throw DomainError("threshold_P0: q must be > 1");
  if (!(alpha > 0.0 && alpha <= 0.5)) throw DomainError("threshold_P0: alpha must be in (0, 1/2]");
  const double lam = std::log(q);
  const double lambda_sin = 1.0 + lam / (2.0 * kPi);
  TruncationBudget sb;
  sb.cutoff = 256;
  sb.tail_tol = 1e-15;
  const double sigma = polylog(complexd(2.0, 0.0), complexd(1.0 / q, 0.0), sb).value.real() - 1.0 / q;

  const double left = 3.0 + std::log(lambda_sin / std::pow(std::cos(kPi * alpha / 2.0), 2.0)) / lam;
  const double middle =
      1.0 + alpha + std::log(lambda_sin / (std::pow(std::sin(kPi * alpha), 2.0) * sigma)) / lam;
  return std::max({left, middle, 5.0});
}

double threshold_P0(double q) {
  const WindowConstants c = compute_constants(q);
  return c.P0;
}

CertifiedValue curvature_K(double q, long p, const TruncationBudget& b) {
  if (!(q > 1.0)) throw DomainError("curvature_K: q must be > 1");
  if (!arith::is_prime(p) || p < 5) throw DomainError("curvature_K: p must be a prime >= 5");
  b.validate();
  const long M = b.cutoff;
  const double lam = std::log(q);
  double sum = 0.0;
  for (long i = 2; i <= M; ++i) {
    if (i == p) continue;
    sum += std::pow(q, -static_cast<double>(i)) * phi_deriv(static_cast<double>(p), i, 2);
  }
  // the single i = p term carries the only negative closed form; keep it
  // even when p lies beyond the cutoff so the tail bound below stays valid
  sum += std::pow(q, -static_cast<double>(p)) *
         (-(2.0 * kPi * kPi / 3.0) * (1.0 - 1.0 / (static_cast<double>(p) * static_cast<double>(p))));
  const double value = 0.5 * (sum - lam * lam * std::pow(q, -static_cast<double>(p)));
  const double tail =
      kPi * kPi / 4.0 * std::pow(q, -static_cast<double>(M) - 1.0) / (1.0 - 1.0 / q);
  if (tail > b.tail_tol) throw BudgetError(tail);
  return {complexd(value, 0.0), tail, false};
}

double third_deriv_budget(double q, double alpha) {
  if (!(q > 1.0)) throw DomainError("third_deriv_budget: q must be > 1");
  if (!(alpha > 0.0 && alpha <= 0.5)) throw DomainError("third_deriv_budget: alpha must be in (0, 1/2]");
  const double B = 1.0 / (2.0 - kPi * alpha);
  const double pi3 = kPi * kPi * kPi;
  const double generic =
      pi3 / (q - 1.0) * (4.0 * B * B + 12.0 * B * B * B + 18.0 * std::pow(B, 4.0) + 24.0 * std::pow(B, 5.0));
  // C_loc(alpha): max |phi_p'''| near a representative small prime, doubled
  const long p_ref = 5;
  double c_loc = 0.0;
  for (int j = -200; j <= 200; ++j) {
    const double x = static_cast<double>(p_ref) + alpha * static_cast<double>(j) / 200.0;
    c_loc = std::max(c_loc, std::abs(phi_deriv_cosine(x, p_ref, 3)));
  }
  c_loc *= 2.0;
  return generic + c_loc * std::pow(q, -5.0);
}

double conservative_lower_eval(double x, double q, long M) {
  if (!(q > 1.0)) throw DomainError("conservative_lower_eval: q must be > 1");
  double partial = 0.0;
  double weight = 1.0 / q;
  for (long i = 2; i <= M; ++i) {
    weight /= q;
    partial += weight * phi_real<double>(x, i, /*integer_fast=*/false);
  }
  const double Md = static_cast<double>(M);
  const double tail = std::pow(q, -(Md + 1.0)) / ((Md + 1.0) * (Md + 1.0) * (1.0 - 1.0 / q));
  const double lam = std::log(q);
  const double s1 = std::sin(2.0 * kPi * x) / (2.0 * kPi);
  const double corrector = std::pow(q, -x) * (1.0 + lam * std::abs(s1));
  return (q - 1.0) * q * (partial - tail - corrector);
}

namespace {

WindowSubReport scan_window(const char* name, double lo, double hi, double analytic_bound,
                            bool analytic_positive, double q, long M, double grid_step) {
  WindowSubReport r;
  r.name = name;
  r.analytic_bound = analytic_bound;
  r.analytic_positive = analytic_positive;
  r.grid_min = std::numeric_limits<double>::infinity();
  for (double x = lo; x <= hi + 1e-15; x += grid_step) {
    if (x <= lo || x >= hi) continue;
    r.grid_min = std::min(r.grid_min, conservative_lower_eval(x, q, M));
  }
  if (!std::isfinite(r.grid_min)) r.grid_min = 0.0;  // window narrower than the step
  r.grid_positive = r.grid_min > 0.0 || !std::isfinite(r.grid_min);
  r.verdict = r.analytic_positive && r.grid_positive;
  return r;
}

}  // namespace

WindowReport verify_window(long p, double q, const WindowConstants& c, double grid_step) {
  if (!(q > 1.0)) throw DomainError("verify_window: q must be > 1");
  if (!arith::is_prime(p) || p < 5 || p % 2 == 0)
    throw DomainError("verify_window: p must be an odd prime >= 5");
  if (!(grid_step > 0.0)) throw DomainError("verify_window: grid_step must be > 0");

  WindowReport rep;
  rep.p = p;
  rep.q = q;
  rep.below_threshold = static_cast<double>(p) < c.P0;

  const double pd = static_cast<double>(p);
  const double alpha = c.alpha;
  const double pref = (q - 1.0) * q;
  const long M = 64;

  const double left_bound =
      pref * (std::pow(q, -2.0) * std::pow(std::cos(kPi * alpha / 2.0), 2.0) -
              std::pow(q, -(pd - 1.0)) * c.LambdaSin);
  const double mid_bound =
      pref * (std::pow(std::sin(kPi * alpha), 2.0) * c.Sigma -
              std::pow(q, -(pd - 1.0 + alpha)) * c.LambdaSin);
  const double right_bound = pref * c.K0 / 2.0 * alpha * alpha;
  const bool right_valid = c.K0 > 0.0 && alpha <= c.deltaSin;

  const bool analytic_applies = !rep.below_threshold;
  rep.left = scan_window("left", pd - 1.0, pd - 1.0 + alpha, left_bound,
                         analytic_applies && left_bound > 0.0, q, M, grid_step);
  rep.middle = scan_window("middle", pd - 1.0 + alpha, pd - alpha, mid_bound,
                           analytic_applies && mid_bound > 0.0, q, M, grid_step);
  rep.right = scan_window("right", pd - alpha, pd, right_bound,
                          analytic_applies && right_valid && right_bound > 0.0, q, M, grid_step);

  // boundary contact at x = p: quadratic zero with curvature 2 (q-1) q K(q,p)
  TruncationBudget kb;
  kb.cutoff = 96;
  kb.tail_tol = 1e-9;
  const double K = curvature_K(q, p, kb).value.real();
  const double h = 1e-4;
  const long Mh = 96;
  const double f_plus = fsharp_real<double>(pd + h, q, Mh);
  const double f_minus = fsharp_real<double>(pd - h, q, Mh);
  rep.contact.curvature_ref = 2.0 * pref * K;
  rep.contact.second_diff = (f_plus + f_minus) / (h * h);  // f(p) = 0 exactly
  rep.contact.first_diff = std::abs(f_plus - f_minus) / (2.0 * h);
  rep.contact.rel_err =
      std::abs(rep.contact.second_diff - rep.contact.curvature_ref) / rep.contact.curvature_ref;
  rep.contact.multiplicity_two = rep.contact.rel_err <= 0.20 && rep.contact.first_diff <= 1e-6;

  const bool grid_ok = rep.left.grid_positive && rep.middle.grid_positive && rep.right.grid_positive;
  if (rep.below_threshold) {
    rep.zero_free = false;
    rep.verdict = grid_ok ? "below threshold - analytic certificate not applicable (grid floor positive)"
                          : "below threshold - analytic certificate not applicable";
  } else {
    rep.zero_free = rep.left.verdict && rep.middle.verdict && rep.right.verdict;
    rep.verdict = rep.zero_free ? "zero-free" : "failed";
  }
  return rep;
}

int companion_required_digits(long p, double q) {
  return static_cast<int>(std::ceil(static_cast<double>(p) * std::log10(q))) + 10;
}

namespace {

template <class R>
CompanionZero find_companion_impl(long p, double q, int digits, long grid_points) {
  CompanionZero cz;
  cz.p = p;
  cz.q = q;
  cz.digits_used = digits;

  const long M = std::max<long>(64, 2 * p + 60);
  cz.kernel_cutoff = M;
  const double lam = std::log(q);
  const R pR = R(p);
  const R lamR = log(R(q));
  const R qmp = exp(-pR * lamR);  // q^{-p}

  // truncated curvature for the initial probe (double is plenty here)
  TruncationBudget kb;
  kb.cutoff = std::min<long>(M, 256);
  kb.tail_tol = 1.0;  // probe only; certified K is recomputed by callers
  const double KM = curvature_K(q, p, kb).value.real();

  const R delta0 = lamR / R(KM) * qmp;
  auto H = [&](R x) { return indicator_core(x, q, M); };

  // bracket around the quadratic-model root p - delta0
  R lo = pR - 2 * delta0;
  R hi = pR - delta0 / 2;
  std::vector<std::pair<double, int>> trace;
  auto sign_of = [&](R v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
  R flo = H(lo), fhi = H(hi);
  trace.emplace_back(static_cast<double>(pR - lo), sign_of(flo));
  trace.emplace_back(static_cast<double>(pR - hi), sign_of(fhi));
  for (int widen = 0; widen < 80 && !(flo > 0 && fhi < 0); ++widen) {
    if (!(flo > 0)) {
      lo = pR - 2 * (pR - lo);
      if (lo <= pR - 1) lo = pR - 1 + R(1e-6);
      flo = H(lo);
      trace.emplace_back(static_cast<double>(pR - lo), sign_of(flo));
    }
    if (!(fhi < 0)) {
      hi = pR - (pR - hi) / 2;
      fhi = H(hi);
      trace.emplace_back(static_cast<double>(pR - hi), sign_of(fhi));
    }
    if (static_cast<double>(pR - lo) >= 1.0 && static_cast<double>(pR - hi) < 1e-60) break;
  }
  if (!(flo > 0 && fhi < 0)) throw BracketError(trace);
  cz.bracket_lo_offset = static_cast<double>(pR - lo);
  cz.bracket_hi_offset = static_cast<double>(pR - hi);

  // bisection to width 10^{-(digits-5)}
  const R width_target = pow(R(10), -(digits - 5));
  while (hi - lo > width_target) {
    const R mid = (lo + hi) / 2;
    const R fm = H(mid);
    if (fm > 0) {
      lo = mid;
    } else if (fm < 0) {
      hi = mid;
    } else {
      lo = hi = mid;
      break;
    }
  }
  R x = (lo + hi) / 2;

  // Newton polish: residual target 10^{-(digits-8)} * (log q) q^{-p}
  const R res_target = pow(R(10), -(digits - 8)) * lamR * qmp;
  R fx = H(x);
  int iters = 0;
  while (abs(fx) >= res_target && iters < 8) {
    const R fpx = indicator_core_deriv(x, q, M);
    if (fpx == 0) break;
    x -= fx / fpx;
    fx = H(x);
    ++iters;
  }
  cz.newton_iters = iters;
  cz.residual = static_cast<double>(abs(fx) * R((q - 1.0) * q));

  const R delta = pR - x;
  cz.x_p = static_cast<double>(x);
  cz.delta = static_cast<double>(delta);
  cz.log_delta = static_cast<double>(log(delta));

  // sign changes on a log-spaced grid of distances from p: 1 down to delta/1000
  const R d_far = R(1) - R(1e-9);
  const R d_near = delta / 1000;
  const R ratio = log(d_near / d_far) / R(grid_points - 1);
  long changes = 0;
  int prev = 0;
  for (long j = 0; j < grid_points; ++j) {
    const R d = d_far * exp(ratio * R(j));
    const int s = sign_of(H(pR - d));
    if (s != 0 && prev != 0 && s != prev) ++changes;
    if (s != 0) prev = s;
  }
  cz.zero_count_on_grid = changes;
  return cz;
}

}  // namespace

CompanionZero find_companion(long p, double q, int digits, long grid_points) {
  if (!(q > 1.0)) throw DomainError("find_companion: q must be > 1");
  if (!arith::is_prime(p) || p < 5 || p % 2 == 0)
    throw DomainError("find_companion: p must be an odd prime >= 5");
  if (grid_points < 16) throw DomainError("find_companion: grid_points too small");
  if (digits == 0) digits = std::max(15, companion_required_digits(p, q));
  if (digits <= 15) return find_companion_impl<double>(p, q, digits, grid_points);
  if (digits <= 32) return find_companion_impl<float128>(p, q, digits, grid_points);
  if (digits <= 48) return find_companion_impl<cpp_bin_float_50>(p, q, digits, grid_points);
  if (digits <= 98) return find_companion_impl<cpp_bin_float_100>(p, q, digits, grid_points);
  throw DomainError("find_companion: required precision exceeds 98 digits");
}

UniquenessCertificate uniqueness_certificate(long p, double q, double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5))
    throw DomainError("uniqueness_certificate: alpha must be in (0, 1/2)");
  if (!(q > 1.0)) throw DomainError("uniqueness_certificate: q must be > 1");
  if (!arith::is_prime(p) || p < 5) throw DomainError("uniqueness_certificate: p must be a prime >= 5");

  UniquenessCertificate cert;
  cert.p = p;
  cert.q = q;
  cert.alpha = alpha;
  const double lam = std::log(q);

  cert.l0_lhs = std::pow(std::cos(kPi * alpha / 2.0), 2.0);
  cert.l0_rhs = std::pow(q, -2.0);
  cert.l0 = cert.l0_lhs >= cert.l0_rhs;

  TruncationBudget sb;
  sb.cutoff = 256;
  sb.tail_tol = 1e-15;
  const double sigma = polylog(complexd(2.0, 0.0), complexd(1.0 / q, 0.0), sb).value.real() - 1.0 / q;
  cert.m0_lhs = std::pow(std::sin(kPi * alpha), 2.0) * sigma;
  cert.m0_rhs = std::pow(q, -4.0 - alpha);
  cert.m0 = cert.m0_lhs >= cert.m0_rhs;

  TruncationBudget kb;
  kb.cutoff = std::max<long>(96, p + 32);
  kb.tail_tol = 1e-9;
  CertifiedValue K = curvature_K(q, p, kb);
  const double K_low = K.value.real() - K.tail_bound;  // safe side of the truncation
  const double t3 = third_deriv_budget(q, alpha);
  cert.c0_alpha = alpha;
  cert.c0_bound = K_low / (t3 + lam * lam * lam * std::pow(q, -static_cast<double>(p)));
  cert.c0 = alpha <= cert.c0_bound;

  cert.certified = cert.l0 && cert.m0 && cert.c0;
  if (cert.certified) {
    cert.verdict = "unique zero certified";
  } else {
    cert.verdict = "not certified; failing:";
    if (!cert.l0) cert.verdict += " (L0)";
    if (!cert.m0) cert.verdict += " (M0)";
    if (!cert.c0) cert.verdict += " (C0)";
  }
  return cert;
}

}  // namespace fdlift
