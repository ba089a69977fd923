#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace fdlift {

using complexd = std::complex<double>;

// Cutoff + tolerance + working precision shared by every series evaluation.
// An evaluation that cannot certify its tail under tail_tol throws BudgetError.
struct TruncationBudget {
  long cutoff = 64;         // truncation index M
  double tail_tol = 1e-9;   // required certified tail
  int digits = 15;          // decimal digits of working precision

  void validate() const {
    if (cutoff < 2) throw std::invalid_argument("TruncationBudget: cutoff must be >= 2");
    if (!(tail_tol > 0)) throw std::invalid_argument("TruncationBudget: tail_tol must be > 0");
    if (digits < 15) throw std::invalid_argument("TruncationBudget: digits must be >= 15");
  }
};

// Value of a truncated series together with an upper bound on everything
// that was left out (series tail plus a floating-point roundoff allowance).
// `heuristic` marks bounds that rest on an empirically calibrated constant
// rather than a closed form (the renormalized-kernel difference constant).
struct CertifiedValue {
  complexd value{0.0, 0.0};
  double tail_bound = 0.0;
  bool heuristic = false;

  double real() const { return value.real(); }
};

struct BudgetError : std::runtime_error {
  double achievable_bound;
  explicit BudgetError(double achievable)
      : std::runtime_error("budget insufficient: achievable tail bound " +
                           std::to_string(achievable)),
        achievable_bound(achievable) {}
};

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace fdlift
