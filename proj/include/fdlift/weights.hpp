#pragma once

#include <memory>
#include <vector>

#include "fdlift/arith.hpp"
#include "fdlift/budget.hpp"
#include "fdlift/characters.hpp"

namespace fdlift {

enum class WeightKind { geometric, power, mobius_power, character_power, mu_star_lambda, table };

// Declarative weight sequence a(i) feeding the lift.  Geometric weights need
// |q| > 1, power-type weights need alpha > 1 for absolute summability.
struct WeightSpec {
  WeightKind kind = WeightKind::power;
  double q = 0.0;
  double alpha = 0.0;
  double scale = 1.0;
  long start_index = 1;
  CharacterTable chi;
  std::shared_ptr<arith::ArithTable> table;

  static WeightSpec geometric(double q, double scale = 1.0, long start_index = 1);
  static WeightSpec power(double alpha);
  static WeightSpec mobius_power(double alpha);
  static WeightSpec character_power(CharacterTable chi, double alpha);
  static WeightSpec mu_star_lambda();
  static WeightSpec from_table(arith::ArithTable t);

  void validate() const;
  bool absolutely_summable() const { return kind != WeightKind::mu_star_lambda; }

  // Dense a(1..M); sieved kinds materialize their tables here.
  std::vector<complexd> coefficients(long M) const;
  // Rigorous upper bound on sum_{i>M} |a(i)|.
  double abs_tail(long M) const;
  // Lower edge of the half-plane of absolute convergence of A(s)
  // (-infinity for geometric and finite tables).
  double abscissa() const;
};

}  // namespace fdlift
