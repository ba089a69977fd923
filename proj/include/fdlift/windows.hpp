#pragma once

#include <string>
#include <vector>

#include "fdlift/budget.hpp"

namespace fdlift {

// Per-q constant pack of the three-window zero-free analysis.
struct WindowConstants {
  double q = 0.0;
  double Sigma = 0.0;         // sum_{i>=2} q^{-i}/i^2
  double LambdaSin = 0.0;     // 1 + log q / (2 pi)
  double CprimeSin = 0.0;     // explicit lower bound for K(q,p)
  double CdblprimeSin = 0.0;  // explicit upper bound for K(q,p)
  double K0 = 0.0;            // CprimeSin / 2
  double C3tot = 0.0;         // third-derivative envelope near primes
  double deltaSin = 0.0;      // prime-uniform right-window radius
  double alpha = 0.0;         // min(1/4, deltaSin/2)
  double P0 = 0.0;            // threshold prime
};

WindowConstants compute_constants(double q, int digits = 15);

double threshold_P0(double q);
double threshold_P0(double q, double alpha);  // user-alpha variant

// K(q,p) = (1/2)(sum_{i>=2} q^{-i} phi_i''(p) - q^{-p} (log q)^2), truncated
// at M with tail bound (pi^2/4) q^{-(M+1)}/(1-1/q); the i = p term is always
// included explicitly.  p must be prime (the sign analysis presumes it).
CertifiedValue curvature_K(double q, long p, const TruncationBudget& b);

// Upper bound for T3(q,alpha) = sup_{|x-p|<=alpha} sum q^{-i} |phi_i'''(x)|:
// (pi^3/(q-1))(4B^2+12B^3+18B^4+24B^5) + C_loc(alpha) q^{-5}, B = 1/(2-pi alpha).
// C_loc is estimated on a grid at a representative small prime, doubled.
double third_deriv_budget(double q, double alpha);

// Rigorous lower bound on Fsharp(x,q): partial sum minus the stated
// geometric tail minus the corrector majorant q^{-x}(1 + log q |S1(x)|).
double conservative_lower_eval(double x, double q, long M);

struct WindowSubReport {
  std::string name;
  double analytic_bound = 0.0;
  bool analytic_positive = false;
  double grid_min = 0.0;
  bool grid_positive = false;
  bool verdict = false;
};

struct BoundaryContact {
  double second_diff = 0.0;
  double first_diff = 0.0;
  double curvature_ref = 0.0;  // 2 (q-1) q K(q,p)
  double rel_err = 0.0;
  bool multiplicity_two = false;
};

struct WindowReport {
  long p = 0;
  double q = 0.0;
  bool below_threshold = false;
  WindowSubReport left, middle, right;
  BoundaryContact contact;
  bool zero_free = false;
  std::string verdict;
};

WindowReport verify_window(long p, double q, const WindowConstants& c, double grid_step = 1e-3);

struct CompanionZero {
  long p = 0;
  double q = 0.0;
  double bracket_lo_offset = 0.0;  // p - lo
  double bracket_hi_offset = 0.0;  // p - hi
  double x_p = 0.0;
  double delta = 0.0;      // p - x_p (may underflow for large p; see log_delta)
  double log_delta = 0.0;  // natural log, always finite
  int newton_iters = 0;
  double residual = 0.0;   // |F(x_p, q)|
  long zero_count_on_grid = 0;
  int digits_used = 0;
  long kernel_cutoff = 0;
};

struct BracketError : std::runtime_error {
  std::vector<std::pair<double, int>> probe_trace;  // (offset below p, sign)
  explicit BracketError(std::vector<std::pair<double, int>> trace)
      : std::runtime_error("bracket failed: no sign change located"),
        probe_trace(std::move(trace)) {}
};

// Locates the companion zero in (p-1, p).  digits = 0 selects the working
// precision automatically from ceil(p log10 q) + 10.
CompanionZero find_companion(long p, double q, int digits = 0, long grid_points = 10000);

int companion_required_digits(long p, double q);

struct UniquenessCertificate {
  long p = 0;
  double q = 0.0, alpha = 0.0;
  double l0_lhs = 0.0, l0_rhs = 0.0;
  double m0_lhs = 0.0, m0_rhs = 0.0;
  double c0_alpha = 0.0, c0_bound = 0.0;
  bool l0 = false, m0 = false, c0 = false;
  bool certified = false;
  std::string verdict;
};

UniquenessCertificate uniqueness_certificate(long p, double q, double alpha);

}  // namespace fdlift
