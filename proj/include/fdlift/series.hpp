#pragma once

#include <string>
#include <vector>

#include "fdlift/budget.hpp"
#include "fdlift/characters.hpp"

namespace fdlift {

// Convergent-series evaluations on Re s > 1 only; no analytic continuation.
// zeta and hurwitz_zeta sum the series and add Euler-Maclaurin correction
// terms carrying a rigorous remainder bound, so the certified tail is far
// below the plain integral bound (which it also satisfies).  These ops grow
// the summation length past budget.cutoff when needed to meet tail_tol and
// throw BudgetError only if no feasible length exists.

CertifiedValue zeta(complexd s, const TruncationBudget& b);          // Re s > 1.05
CertifiedValue hurwitz_zeta(complexd s, double a, const TruncationBudget& b);  // Re s > 1, a in (0,1]

// zeta'(s) by the differentiated truncated series -sum log n / n^s with the
// integral tail bound N^{1-sigma}(log N/(sigma-1) + 1/(sigma-1)^2).
CertifiedValue zeta_deriv(complexd s, const TruncationBudget& b);

CertifiedValue polylog(complexd s, complexd z, const TruncationBudget& b);  // |z|<1, or |z|=1 & Re s>1
CertifiedValue eta(complexd s, const TruncationBudget& b);                  // eta(1) = log 2 special value
CertifiedValue eta_alternating(double s, const TruncationBudget& b);        // direct alternating sum, s > 0
CertifiedValue eta_functional(complexd s, const TruncationBudget& b);       // (1 - 2^{1-s}) zeta(s)
CertifiedValue eta_Q(complexd s, double Q, const TruncationBudget& b);      // Q > 1, Re s >= 0
CertifiedValue lerch_phi(complexd z, complexd s, double a, const TruncationBudget& b);  // |z| < 1
CertifiedValue dirichlet_L(complexd s, const CharacterTable& chi, const TruncationBudget& b);

// LHS/RHS of a Dirichlet-series identity with certified budgets; the verdict
// is computed (gap <= budget_gap + slack), never asserted.
struct SeriesCheck {
  std::string identity;
  complexd s{};
  std::string params;
  CertifiedValue lhs, rhs;
  double gap = 0.0;
  double budget_gap = 0.0;
  double slack = 1e-8;
  bool verdict = false;
  std::string detail;
};

SeriesCheck make_check(std::string identity, complexd s, std::string params,
                       const CertifiedValue& lhs, const CertifiedValue& rhs, double slack = 1e-8);

// sum_{n>=2} F(n,q) n^{-s} = (q-1) q (zeta(s) - 1)(Li_s(1/q) - 1/q); with
// sum_variant the Fejer-sum line (zeta(s), not zeta(s)-1) is checked.
SeriesCheck verify_polylog_zeta(complexd q, complexd s, long N, const TruncationBudget& b,
                                bool sum_variant = false);

// Reconstruction of zeta(s) as the quotient of the truncated S-series by
// (q-1) q (Li_s(1/q) - 1/q).
SeriesCheck verify_zeta_reconstruction(complexd q, complexd s, long N, const TruncationBudget& b);

// sum F(n,-1) n^{-s} = 2 (zeta(s) - 1)(1 - eta(s)), exact integer anchors.
SeriesCheck verify_qminus1(complexd s, long N, const TruncationBudget& b);

// sum F(n,-Q) n^{-s} = Q (Q+1) (zeta(s) - 1)(1/Q - eta_Q(s)).
SeriesCheck verify_qnegQ(double Q, complexd s, long N, const TruncationBudget& b);

// Twisted sum vs finite Hurwitz combination; when the unit group mod m is
// cyclic, additionally the Gauss-sum L-decomposition of the coprime part.
SeriesCheck verify_lerch_bridge(int m, int a, complexd s, const TruncationBudget& b);

// Lerch deformation at q = R e^{2 pi i a/m}, R > 1: Li_s(1/q) vs the finite
// Phi-combination sum_r e^{-2 pi i a r/m} R^{-r} Phi(R^{-m}, s, r/m).
SeriesCheck verify_lerch_deformation(double R, int m, int a, complexd s, const TruncationBudget& b);

// sum_{n<=N} (-sum_{d|n} log d) n^{-u} vs zeta(u) zeta'(u).
SeriesCheck verify_zeta_zetaprime(complexd u, long N, const TruncationBudget& b);

// ---------------------------------------------------------------------------
// Nontrivial-zero data and the explicit formula for psi.
// ---------------------------------------------------------------------------

// ASCII file, one positive ordinate per line, '#' comments; must be strictly
// increasing with the first entry in (14.1, 14.2).
struct ZetaZeroTable {
  std::vector<double> gammas;
  std::string source;

  std::size_t count() const { return gammas.size(); }
  static ZetaZeroTable load(const std::string& path);
};

struct PsiExplicitResult {
  double x = 0.0;
  std::size_t zeros_used = 0;
  double truncated_rhs = 0.0;
  double direct_psi = 0.0;
  double residual = 0.0;
  bool half_weight_applied = false;
};

// psi(x) = x - sum_rho x^rho/rho - log(2 pi) - (1/2) log(1 - x^{-2}), zeros
// paired as 2 Re(x^{1/2+i gamma}/(1/2+i gamma)); at prime-power x the direct
// side gets the standard half-weight correction.
PsiExplicitResult explicit_formula_psi(double x, const ZetaZeroTable& zeros,
                                       std::size_t use_count);

}  // namespace fdlift
