#pragma once

#include <cstdint>
#include <vector>

#include "fdlift/budget.hpp"

namespace fdlift::arith {

// Ordered divisor list by trial division up to sqrt(n). Rejects n = 0.
std::vector<std::int64_t> divisors(std::int64_t n);

int mobius(std::int64_t n);
double von_mangoldt(std::int64_t n);
bool is_prime(std::int64_t n);
bool is_prime_power(std::int64_t n);
int two_adic_valuation(std::int64_t n);

std::vector<std::int64_t> primes_up_to(std::int64_t n);

// Sieved value tables on 1..limit.
std::vector<int> mobius_sieve(std::int64_t limit);
std::vector<double> von_mangoldt_sieve(std::int64_t limit);

// psi(x) = sum of Lambda(n) over n <= x; the full term is included at
// integer x (half-weight handling is the explicit-formula comparator's job).
double chebyshev_psi(double x);

// S_r(n;R) = sum of R^{-d} over proper divisors 2 <= d < n with d = r mod m.
std::vector<double> residue_divisor_sums(std::int64_t n, int m, double R);

// Dense table of an arithmetic function on 1..limit (index 0 unused).
struct ArithTable {
  std::int64_t limit = 0;
  std::vector<double> values;  // values[n] for 1 <= n <= limit

  double at(std::int64_t n) const { return values[static_cast<std::size_t>(n)]; }

  static ArithTable ones(std::int64_t limit);
  static ArithTable log_n(std::int64_t limit);
  static ArithTable mobius(std::int64_t limit);
  static ArithTable von_mangoldt(std::int64_t limit);
  static ArithTable tau(std::int64_t limit);
};

// (f*g)(n) for n <= limit; both tables must cover 1..limit.
ArithTable dirichlet_convolve(const ArithTable& f, const ArithTable& g, std::int64_t limit);

}  // namespace fdlift::arith
