#include "fdlift/series.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "fdlift/arith.hpp"
#include "fdlift/indicator.hpp"

namespace fdlift {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kRoundoffFactor = 8.0;

complexd pow_nc(double n, complexd s) { return std::exp(-s * std::log(n)); }  // n^{-s}

complexd rising(complexd s, int m) {
  complexd r = 1.0;
  for (int j = 0; j < m; ++j) r *= s + static_cast<double>(j);
  return r;
}

// B_{2j}/(2j)! for j = 1..4 and the j = 5 coefficient used in the remainder.
constexpr double kBern[4] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0};
constexpr double kBernNext = 5.0 / 66.0 / 3628800.0;  // |B_10|/10!

struct EmResult {
  complexd value;
  double remainder;
  double abs_terms;
};

// Euler-Maclaurin evaluation of sum_{k>=0} (k+a)^{-s} on Re s > 1.
EmResult em_hurwitz(complexd s, double a, long N) {
  const double sigma = s.real();
  complexd sum = 0.0;
  double abs_terms = 0.0;
  for (long k = 0; k < N; ++k) {
    const complexd t = pow_nc(static_cast<double>(k) + a, s);
    sum += t;
    abs_terms += std::abs(t);
  }
  const double Na = static_cast<double>(N) + a;
  const complexd NaS = pow_nc(Na, s);  // (N+a)^{-s}
  sum += NaS * Na / (s - 1.0);         // (N+a)^{1-s}/(s-1)
  sum += 0.5 * NaS;
  for (int j = 0; j < 4; ++j) {
    // B_{2(j+1)}/(2(j+1))! * (s)_{2j+1} * (N+a)^{-s-2j-1}
    sum += kBern[j] * rising(s, 2 * j + 1) * NaS * std::pow(Na, -1.0 - 2.0 * j);
  }
  const double remainder = std::abs(s + 9.0) / (sigma + 9.0) * kBernNext *
                           std::abs(rising(s, 9)) * std::pow(Na, -sigma - 9.0);
  abs_terms += std::abs(NaS) * (Na / std::abs(s - 1.0) + 1.0);
  return {sum, remainder, abs_terms};
}

double roundoff(double abs_terms) { return kRoundoffFactor * kEps * abs_terms; }

}  // namespace

CertifiedValue hurwitz_zeta(complexd s, double a, const TruncationBudget& b) {
  if (!(a > 0.0) || a > 1.0) throw DomainError("hurwitz_zeta: a must be in (0,1]");
  if (!(s.real() > 1.0)) throw DomainError("hurwitz_zeta: Re s must be > 1");
  long N = std::max<long>(48, static_cast<long>(std::ceil(4.0 * std::abs(s))));
  EmResult r = em_hurwitz(s, a, N);
  while (r.remainder > b.tail_tol && N < 100000) {
    N *= 2;
    r = em_hurwitz(s, a, N);
  }
  if (r.remainder > b.tail_tol) throw BudgetError(r.remainder);
  return {r.value, r.remainder + roundoff(r.abs_terms), false};
}

CertifiedValue zeta(complexd s, const TruncationBudget& b) {
  if (!(s.real() > 1.05)) throw DomainError("zeta: Re s must exceed 1 + margin (0.05)");
  return hurwitz_zeta(s, 1.0, b);
}

namespace {
std::mutex zeta_deriv_mutex;
std::map<std::pair<std::pair<double, double>, long>, complexd> zeta_deriv_cache;
}  // namespace

CertifiedValue zeta_deriv(complexd s, const TruncationBudget& b) {
  const double sigma = s.real();
  if (!(sigma > 1.05)) throw DomainError("zeta_deriv: Re s must exceed 1 + margin (0.05)");
  auto tail_at = [&](double N) {
    return std::pow(N, 1.0 - sigma) * (std::log(N) / (sigma - 1.0) + 1.0 / ((sigma - 1.0) * (sigma - 1.0)));
  };
  long N = std::max<long>(b.cutoff, 32);
  const long cap = 30000000;
  while (tail_at(static_cast<double>(N)) > b.tail_tol && N < cap) N *= 2;
  const double tail = tail_at(static_cast<double>(N));
  if (tail > b.tail_tol) throw BudgetError(tail);

  complexd sum;
  {
    std::lock_guard<std::mutex> lock(zeta_deriv_mutex);
    auto key = std::make_pair(std::make_pair(s.real(), s.imag()), N);
    auto it = zeta_deriv_cache.find(key);
    if (it != zeta_deriv_cache.end()) {
      sum = it->second;
    } else {
      complexd acc = 0.0;
      for (long n = 2; n <= N; ++n) acc -= std::log(static_cast<double>(n)) * pow_nc(static_cast<double>(n), s);
      zeta_deriv_cache[key] = acc;
      sum = acc;
    }
  }
  // sum of term magnitudes is at most 1/(sigma-1)^2 + 1
  const double abs_terms = 1.0 / ((sigma - 1.0) * (sigma - 1.0)) + 1.0;
  return {sum, tail + roundoff(abs_terms), false};
}

CertifiedValue polylog(complexd s, complexd z, const TruncationBudget& b) {
  const double az = std::abs(z);
  if (az > 1.0 + 1e-15) throw DomainError("polylog: |z| must be <= 1");
  const double sigma = s.real();
  const bool on_circle = az > 1.0 - 1e-15;
  if (on_circle && !(sigma > 1.0)) throw DomainError("polylog: |z| = 1 requires Re s > 1");

  long N = std::max<long>(b.cutoff, 16);
  const long cap = on_circle ? 20000000 : 2000000;
  auto tail_at = [&](long n) -> double {
    const double Nn = static_cast<double>(n);
    if (on_circle) return std::pow(Nn, 1.0 - sigma) / (sigma - 1.0);
    if (sigma >= 0.0) return std::pow(az, Nn + 1.0) * std::pow(Nn + 1.0, -sigma) / (1.0 - az);
    const double t = -sigma;
    const double grow = az * std::exp(t / (Nn + 1.0));
    if (grow >= 1.0) return std::numeric_limits<double>::infinity();
    return std::pow(az, Nn + 1.0) * std::pow(Nn + 1.0, t) / (1.0 - grow);
  };
  while (tail_at(N) > b.tail_tol && N < cap) N *= 2;
  const double tail = tail_at(N);
  if (tail > b.tail_tol) throw BudgetError(tail);

  complexd sum = 0.0, zp = 1.0;
  double abs_terms = 0.0;
  const double arg_z = std::arg(z);
  for (long n = 1; n <= N; ++n) {
    // on the unit circle use the exact polar form so the phase does not drift
    zp = on_circle ? std::polar(1.0, arg_z * static_cast<double>(n)) : zp * z;
    const complexd t = zp * pow_nc(static_cast<double>(n), s);
    sum += t;
    abs_terms += std::abs(t);
  }
  return {sum, tail + roundoff(abs_terms), false};
}

CertifiedValue eta_alternating(double s, const TruncationBudget& b) {
  if (!(s > 0.0)) throw DomainError("eta_alternating: s must be > 0");
  long N = std::max<long>(b.cutoff, 16);
  const long cap = 20000000;
  auto tail_at = [&](long n) { return std::pow(static_cast<double>(n) + 1.0, -s); };
  while (tail_at(N) > b.tail_tol && N < cap) N *= 2;
  const double tail = tail_at(N);
  if (tail > b.tail_tol) throw BudgetError(tail);
  double sum = 0.0;
  for (long n = N; n >= 1; --n) {
    const double t = std::pow(static_cast<double>(n), -s);
    sum = (n % 2 == 1) ? sum + t : sum - t;
  }
  return {complexd(sum, 0.0), tail + roundoff(2.0), false};
}

CertifiedValue eta_functional(complexd s, const TruncationBudget& b) {
  CertifiedValue z = zeta(s, b);
  const complexd factor = 1.0 - std::exp((1.0 - s) * std::log(2.0));
  return {factor * z.value, std::abs(factor) * z.tail_bound + roundoff(std::abs(z.value)), false};
}

CertifiedValue eta(complexd s, const TruncationBudget& b) {
  if (std::abs(s - complexd(1.0, 0.0)) < 1e-14) {
    // documented special value for the s = 1 behaviour check: eta(1) = log 2
    return {complexd(std::numbers::ln2, 0.0), 1e-15, false};
  }
  if (s.real() > 1.05) return eta_functional(s, b);
  if (std::abs(s.imag()) < 1e-14 && s.real() > 0.0) return eta_alternating(s.real(), b);
  throw DomainError("eta: need Re s > 1 (functional) or real s > 0 (alternating)");
}

CertifiedValue eta_Q(complexd s, double Q, const TruncationBudget& b) {
  if (!(Q > 1.0)) throw DomainError("eta_Q: Q must be > 1");
  if (s.real() < 0.0) throw DomainError("eta_Q: Re s must be >= 0");
  const double x = 1.0 / Q;
  long N = std::max<long>(b.cutoff, 16);
  const long cap = 2000000;
  auto tail_at = [&](long n) {
    return std::pow(x, static_cast<double>(n) + 1.0) *
           std::pow(static_cast<double>(n) + 1.0, -s.real()) / (1.0 - x);
  };
  while (tail_at(N) > b.tail_tol && N < cap) N *= 2;
  const double tail = tail_at(N);
  if (tail > b.tail_tol) throw BudgetError(tail);
  complexd sum = 0.0;
  double xp = 1.0, abs_terms = 0.0;
  for (long n = 1; n <= N; ++n) {
    xp *= x;
    const complexd t = xp * pow_nc(static_cast<double>(n), s);
    sum += (n % 2 == 1) ? t : -t;
    abs_terms += std::abs(t);
  }
  return {sum, tail + roundoff(abs_terms), false};
}

CertifiedValue lerch_phi(complexd z, complexd s, double a, const TruncationBudget& b) {
  if (!(a > 0.0)) throw DomainError("lerch_phi: a must be > 0");
  const double az = std::abs(z);
  if (az >= 1.0 - 1e-15) throw DomainError("lerch_phi: |z| must be < 1");
  const double sigma = s.real();
  long N = std::max<long>(b.cutoff, 16);
  const long cap = 2000000;
  auto tail_at = [&](long n) -> double {
    const double base = static_cast<double>(n) + 1.0 + a;
    if (sigma >= 0.0) return std::pow(az, static_cast<double>(n) + 1.0) * std::pow(base, -sigma) / (1.0 - az);
    const double t = -sigma;
    const double grow = az * std::exp(t / base);
    if (grow >= 1.0) return std::numeric_limits<double>::infinity();
    return std::pow(az, static_cast<double>(n) + 1.0) * std::pow(base, t) / (1.0 - grow);
  };
  while (tail_at(N) > b.tail_tol && N < cap) N *= 2;
  const double tail = tail_at(N);
  if (tail > b.tail_tol) throw BudgetError(tail);
  complexd sum = 0.0, zp = 1.0;
  double abs_terms = 0.0;
  for (long k = 0; k <= N; ++k) {
    const complexd t = zp * pow_nc(static_cast<double>(k) + a, s);
    sum += t;
    abs_terms += std::abs(t);
    zp *= z;
  }
  return {sum, tail + roundoff(abs_terms), false};
}

CertifiedValue dirichlet_L(complexd s, const CharacterTable& chi, const TruncationBudget& b) {
  if (!(s.real() > 1.0)) throw DomainError("dirichlet_L: Re s must be > 1");
  const int m = chi.modulus;
  const long N = std::max<long>(64, 4 * static_cast<long>(std::ceil(std::abs(s))));
  complexd sum = 0.0;
  double tail = 0.0, absv = 0.0;
  for (int r = 1; r <= m; ++r) {
    const complexd c = chi.values[static_cast<std::size_t>(r % m)];
    if (c == complexd(0.0)) continue;
    EmResult e = em_hurwitz(s, static_cast<double>(r) / m, N);
    sum += c * e.value;
    tail += std::abs(c) * e.remainder;
    absv += e.abs_terms;
  }
  const complexd scale = pow_nc(static_cast<double>(m), s);
  if (std::abs(scale) * tail > b.tail_tol) throw BudgetError(std::abs(scale) * tail);
  return {scale * sum, std::abs(scale) * tail + roundoff(absv * std::abs(scale)), false};
}

SeriesCheck make_check(std::string identity, complexd s, std::string params,
                       const CertifiedValue& lhs, const CertifiedValue& rhs, double slack) {
  SeriesCheck c;
  c.identity = std::move(identity);
  c.s = s;
  c.params = std::move(params);
  c.lhs = lhs;
  c.rhs = rhs;
  c.gap = std::abs(lhs.value - rhs.value);
  c.budget_gap = lhs.tail_bound + rhs.tail_bound;
  c.slack = slack;
  c.verdict = c.gap <= c.budget_gap + slack;
  return c;
}

namespace {

// Truncated Dirichlet series of the integer indicator values, with the
// pointwise bound |F(n,q)| <= |(q-1)q| |q|^{-2}/(1-1/|q|) feeding the tail.
CertifiedValue indicator_dirichlet_lhs(complexd q, complexd s, long N, bool sum_variant) {
  const double sigma = s.real();
  complexd sum = 0.0;
  double abs_terms = 0.0;
  for (long n = 2; n <= N; ++n) {
    complexd v = indicator_integer(n, q);
    if (sum_variant) v += (q - 1.0) * q * std::pow(1.0 / q, static_cast<double>(n));
    const complexd t = v * pow_nc(static_cast<double>(n), s);
    sum += t;
    abs_terms += std::abs(t);
  }
  const double aq = std::abs(q);
  const double bound_f = std::abs((q - 1.0) * q) * std::pow(aq, -2.0) / (1.0 - 1.0 / aq);
  const double tail = bound_f * std::pow(static_cast<double>(N), 1.0 - sigma) / (sigma - 1.0);
  return {sum, tail + roundoff(abs_terms), false};
}

}  // namespace

SeriesCheck verify_polylog_zeta(complexd q, complexd s, long N, const TruncationBudget& b,
                                bool sum_variant) {
  if (!(std::abs(q) > 1.0)) throw DomainError("verify_polylog_zeta: |q| must be > 1");
  if (!(s.real() > 1.05)) throw DomainError("verify_polylog_zeta: Re s must be > 1");
  CertifiedValue lhs = indicator_dirichlet_lhs(q, s, N, sum_variant);
  CertifiedValue zs = zeta(s, b);
  CertifiedValue li = polylog(s, 1.0 / q, b);
  const complexd pref = (q - 1.0) * q;
  const complexd zfac = sum_variant ? zs.value : zs.value - 1.0;
  const complexd lfac = li.value - 1.0 / q;
  CertifiedValue rhs;
  rhs.value = pref * zfac * lfac;
  rhs.tail_bound = std::abs(pref) * (std::abs(zfac) * li.tail_bound + std::abs(lfac) * zs.tail_bound +
                                     zs.tail_bound * li.tail_bound);
  std::ostringstream p;
  p << "q=" << q.real() << (q.imag() != 0 ? "+" + std::to_string(q.imag()) + "i" : "") << " N=" << N
    << (sum_variant ? " variant=S" : " variant=F");
  return make_check(sum_variant ? "polylog-zeta-S" : "polylog-zeta", s, p.str(), lhs, rhs);
}

SeriesCheck verify_zeta_reconstruction(complexd q, complexd s, long N, const TruncationBudget& b) {
  if (!(std::abs(q) > 1.0)) throw DomainError("verify_zeta_reconstruction: |q| must be > 1");
  CertifiedValue lhs_sum = indicator_dirichlet_lhs(q, s, N, /*sum_variant=*/true);
  CertifiedValue li = polylog(s, 1.0 / q, b);
  const complexd denom = (q - 1.0) * q * (li.value - 1.0 / q);
  CertifiedValue quotient;
  quotient.value = lhs_sum.value / denom;
  const double dmag = std::abs(denom);
  quotient.tail_bound = lhs_sum.tail_bound / dmag +
                        std::abs(lhs_sum.value) * std::abs((q - 1.0) * q) * li.tail_bound / (dmag * dmag);
  CertifiedValue zs = zeta(s, b);
  std::ostringstream p;
  p << "q=" << q.real() << " N=" << N;
  return make_check("zeta-reconstruction", s, p.str(), quotient, zs);
}

SeriesCheck verify_qminus1(complexd s, long N, const TruncationBudget& b) {
  const double sigma = s.real();
  if (!(sigma > 1.55)) throw DomainError("verify_qminus1: Re s must exceed 1.55 (tau tail bound)");
  complexd sum = 0.0;
  double abs_terms = 0.0;
  for (long n = 2; n <= N; ++n) {
    const complexd t = indicator_integer(n, complexd(-1.0, 0.0)) * pow_nc(static_cast<double>(n), s);
    sum += t;
    abs_terms += std::abs(t);
  }
  // |F(n,-1)| <= 2 tau(n) <= 4 sqrt(n)
  const double tail =
      4.0 * std::pow(static_cast<double>(N), 1.5 - sigma) / (sigma - 1.5);
  CertifiedValue lhs{sum, tail + roundoff(abs_terms), false};
  CertifiedValue zs = zeta(s, b);
  CertifiedValue et = eta_functional(s, b);
  CertifiedValue rhs;
  rhs.value = 2.0 * (zs.value - 1.0) * (1.0 - et.value);
  rhs.tail_bound = 2.0 * (std::abs(zs.value - 1.0) * et.tail_bound +
                          std::abs(1.0 - et.value) * zs.tail_bound + zs.tail_bound * et.tail_bound);
  std::ostringstream p;
  p << "N=" << N;
  return make_check("qminus1-eta", s, p.str(), lhs, rhs);
}

SeriesCheck verify_qnegQ(double Q, complexd s, long N, const TruncationBudget& b) {
  if (!(Q > 1.0)) throw DomainError("verify_qnegQ: Q must be > 1");
  if (!(s.real() > 1.05)) throw DomainError("verify_qnegQ: Re s must be > 1");
  CertifiedValue lhs = indicator_dirichlet_lhs(complexd(-Q, 0.0), s, N, false);
  CertifiedValue zs = zeta(s, b);
  CertifiedValue eq = eta_Q(s, Q, b);
  const double pref = Q * (Q + 1.0);
  CertifiedValue rhs;
  rhs.value = pref * (zs.value - 1.0) * (1.0 / Q - eq.value);
  rhs.tail_bound = pref * (std::abs(zs.value - 1.0) * eq.tail_bound +
                           std::abs(1.0 / Q - eq.value) * zs.tail_bound + zs.tail_bound * eq.tail_bound);
  std::ostringstream p;
  p << "Q=" << Q << " N=" << N;
  return make_check("qnegQ-etaQ", s, p.str(), lhs, rhs);
}

SeriesCheck verify_lerch_bridge(int m, int a, complexd s, const TruncationBudget& b) {
  if (m < 1 || a < 0 || a >= m)
    throw DomainError("verify_lerch_bridge: need m >= 1 and 0 <= a < m");
  const double sigma = s.real();
  if (!(sigma > 1.05)) throw DomainError("verify_lerch_bridge: Re s must be > 1");
  const double theta = 2.0 * kPi * static_cast<double>(a) / m;

  long N = std::max<long>(b.cutoff, 1024);
  auto tail_at = [&](long n) { return std::pow(static_cast<double>(n), 1.0 - sigma) / (sigma - 1.0); };
  const long cap = 20000000;
  while (tail_at(N) > b.tail_tol && N < cap) N *= 2;
  const double tail = tail_at(N);
  if (tail > b.tail_tol) throw BudgetError(tail);

  complexd direct = 0.0, direct_coprime = 0.0;
  double abs_terms = 0.0;
  for (long n = 1; n <= N; ++n) {
    const complexd t = std::polar(1.0, -theta * static_cast<double>(n)) * pow_nc(static_cast<double>(n), s);
    direct += t;
    if (std::gcd(n, static_cast<long>(m)) == 1) direct_coprime += t;
    abs_terms += std::abs(t);
  }
  CertifiedValue lhs{direct, tail + roundoff(abs_terms), false};

  // finite Hurwitz combination: m^{-s} sum_r e^{-2 pi i a r/m} zeta(s, r/m)
  complexd hsum = 0.0;
  double htail = 0.0, habs = 0.0;
  for (int r = 1; r <= m; ++r) {
    EmResult e = em_hurwitz(s, static_cast<double>(r) / m, 64);
    const complexd phase = std::polar(1.0, -2.0 * kPi * a * r / m);
    hsum += phase * e.value;
    htail += e.remainder;
    habs += e.abs_terms;
  }
  const complexd ms = pow_nc(static_cast<double>(m), s);
  CertifiedValue rhs{ms * hsum, std::abs(ms) * htail + roundoff(habs * std::abs(ms)), false};

  SeriesCheck check = make_check("lerch-bridge", s, "m=" + std::to_string(m) + " a=" + std::to_string(a), lhs, rhs);

  // Gauss-sum route on the coprime part (cyclic unit groups only):
  // sum_{gcd(n,m)=1} e^{-i theta n} n^{-s} = phi(m)^{-1} sum_chi tau(conj chi, a) L(s, chi)
  try {
    auto chars = characters_mod(m);
    complexd lsum = 0.0;
    double ltail = 0.0;
    for (const auto& chi : chars) {
      CharacterTable conj_chi = chi;
      for (auto& v : conj_chi.values) v = std::conj(v);
      CertifiedValue L = dirichlet_L(s, chi, b);
      const complexd tau = gauss_sum(conj_chi, a);
      lsum += tau * L.value;
      ltail += std::abs(tau) * L.tail_bound;
    }
    const double phi_m = euler_phi(m);
    const complexd gauss_side = lsum / phi_m;
    const double ggap = std::abs(direct_coprime - gauss_side);
    const double gbudget = tail + ltail / phi_m + roundoff(abs_terms);
    check.detail = "gauss-sum route (coprime part): gap=" + std::to_string(ggap);
    check.verdict = check.verdict && (ggap <= gbudget + check.slack);
  } catch (const DomainError&) {
    check.detail = "gauss-sum route skipped: unit group mod m not cyclic";
  }
  return check;
}

SeriesCheck verify_lerch_deformation(double R, int m, int a, complexd s, const TruncationBudget& b) {
  if (!(R > 1.0)) throw DomainError("verify_lerch_deformation: R must be > 1");
  const complexd q = std::polar(R, 2.0 * kPi * static_cast<double>(a) / m);
  CertifiedValue lhs = polylog(s, 1.0 / q, b);
  complexd sum = 0.0;
  double tail = 0.0;
  const double Rm = std::pow(R, -static_cast<double>(m));
  for (int r = 1; r <= m; ++r) {
    CertifiedValue phi_r = lerch_phi(complexd(Rm, 0.0), s, static_cast<double>(r) / m, b);
    const complexd c = std::polar(std::pow(R, -static_cast<double>(r)), -2.0 * kPi * a * r / m);
    sum += c * phi_r.value;
    tail += std::abs(c) * phi_r.tail_bound;
  }
  const complexd ms = pow_nc(static_cast<double>(m), s);
  CertifiedValue rhs{ms * sum, std::abs(ms) * tail, false};
  std::ostringstream p;
  p << "R=" << R << " m=" << m << " a=" << a;
  return make_check("lerch-deformation", s, p.str(), lhs, rhs);
}

SeriesCheck verify_zeta_zetaprime(complexd u, long N, const TruncationBudget& b) {
  const double sigma = u.real();
  if (!(sigma > 1.55)) throw DomainError("verify_zeta_zetaprime: Re u must exceed 1.55");
  // sieve sum_{d|n} log d
  std::vector<double> divlog(static_cast<std::size_t>(N) + 1, 0.0);
  for (long d = 2; d <= N; ++d) {
    const double ld = std::log(static_cast<double>(d));
    for (long n = d; n <= N; n += d) divlog[static_cast<std::size_t>(n)] += ld;
  }
  complexd sum = 0.0;
  double abs_terms = 0.0;
  for (long n = 2; n <= N; ++n) {
    const complexd t = -divlog[static_cast<std::size_t>(n)] * pow_nc(static_cast<double>(n), u);
    sum += t;
    abs_terms += std::abs(t);
  }
  // sum_{d|n} log d <= tau(n) log n <= 2 sqrt(n) log n
  const double Nn = static_cast<double>(N);
  const double tail = 2.0 * std::pow(Nn, 1.5 - sigma) *
                      (std::log(Nn) / (sigma - 1.5) + 1.0 / ((sigma - 1.5) * (sigma - 1.5)));
  CertifiedValue lhs{sum, tail + roundoff(abs_terms), false};

  CertifiedValue zs = zeta(u, b);
  TruncationBudget deriv_budget = b;
  deriv_budget.tail_tol = std::max(b.tail_tol, 1e-6);
  CertifiedValue zd = zeta_deriv(u, deriv_budget);
  CertifiedValue rhs;
  rhs.value = zs.value * zd.value;
  rhs.tail_bound = std::abs(zs.value) * zd.tail_bound + std::abs(zd.value) * zs.tail_bound +
                   zs.tail_bound * zd.tail_bound;
  std::ostringstream p;
  p << "N=" << N;
  return make_check("zeta-zetaprime", u, p.str(), lhs, rhs);
}

ZetaZeroTable ZetaZeroTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("zeros file not found: " + path);
  ZetaZeroTable table;
  table.source = path;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    double gamma;
    if (!(ls >> gamma)) {
      std::string rest;
      if (ls.clear(), ls >> rest) {
        throw DomainError("zeros file: malformed line " + std::to_string(line_no) + ": '" + line + "'");
      }
      continue;  // blank / comment-only line
    }
    std::string trailing;
    if (ls >> trailing)
      throw DomainError("zeros file: malformed line " + std::to_string(line_no) + ": '" + line + "'");
    if (!(gamma > 0.0))
      throw DomainError("zeros file: non-positive ordinate at line " + std::to_string(line_no));
    if (!table.gammas.empty() && gamma <= table.gammas.back())
      throw DomainError("zeros file: ordinates not strictly increasing at line " + std::to_string(line_no));
    table.gammas.push_back(gamma);
  }
  if (!table.gammas.empty() && (table.gammas.front() <= 14.1 || table.gammas.front() >= 14.2))
    throw DomainError("zeros file: first ordinate outside the sanity range (14.1, 14.2)");
  return table;
}

PsiExplicitResult explicit_formula_psi(double x, const ZetaZeroTable& zeros, std::size_t use_count) {
  if (!(x > 1.0)) throw DomainError("explicit_formula_psi: x must be > 1");
  PsiExplicitResult res;
  res.x = x;
  res.zeros_used = std::min(use_count, zeros.gammas.size());

  double rhs = x - std::log(2.0 * kPi) - 0.5 * std::log(1.0 - std::pow(x, -2.0));
  const double sq = std::sqrt(x), lx = std::log(x);
  for (std::size_t j = 0; j < res.zeros_used; ++j) {
    const double g = zeros.gammas[j];
    const complexd rho(0.5, g);
    const complexd xr = sq * std::polar(1.0, g * lx);
    rhs -= 2.0 * (xr / rho).real();
  }
  res.truncated_rhs = rhs;

  res.direct_psi = arith::chebyshev_psi(x);
  if (std::abs(x - std::round(x)) < 1e-9) {
    const auto n = static_cast<std::int64_t>(std::llround(x));
    if (arith::is_prime_power(n)) {
      res.direct_psi -= 0.5 * arith::von_mangoldt(n);
      res.half_weight_applied = true;
    }
  }
  res.residual = std::abs(res.truncated_rhs - res.direct_psi);
  return res;
}

}  // namespace fdlift
