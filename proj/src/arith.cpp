#include "fdlift/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fdlift::arith {

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw DomainError("divisors: n must be >= 1");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius(std::int64_t n) {
  if (n < 1) throw DomainError("mobius: n must be >= 1");
  int factors = 0;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++factors;
    }
  }
  if (n > 1) ++factors;
  return (factors % 2 == 0) ? 1 : -1;
}

double von_mangoldt(std::int64_t n) {
  if (n < 1) throw DomainError("von_mangoldt: n must be >= 1");
  if (n == 1) return 0.0;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return (n == 1) ? std::log(static_cast<double>(p)) : 0.0;
    }
  }
  return std::log(static_cast<double>(n));  // n itself prime
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool is_prime_power(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1;
    }
  }
  return true;
}

int two_adic_valuation(std::int64_t n) {
  if (n < 1) throw DomainError("two_adic_valuation: n must be >= 1");
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (std::int64_t p = 2; p <= n; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    primes.push_back(p);
    for (std::int64_t m = p * p; m <= n; m += p) composite[static_cast<std::size_t>(m)] = true;
  }
  return primes;
}

std::vector<int> mobius_sieve(std::int64_t limit) {
  std::vector<int> mu(static_cast<std::size_t>(limit) + 1, 1);
  std::vector<std::int64_t> spf(static_cast<std::size_t>(limit) + 1, 0);
  std::vector<std::int64_t> primes;
  mu[0] = 0;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (spf[static_cast<std::size_t>(i)] == 0) {
      spf[static_cast<std::size_t>(i)] = i;
      primes.push_back(i);
      mu[static_cast<std::size_t>(i)] = -1;
    }
    for (std::int64_t p : primes) {
      if (p > spf[static_cast<std::size_t>(i)] || i * p > limit) break;
      spf[static_cast<std::size_t>(i * p)] = p;
      mu[static_cast<std::size_t>(i * p)] = (i % p == 0) ? 0 : -mu[static_cast<std::size_t>(i)];
    }
  }
  return mu;
}

std::vector<double> von_mangoldt_sieve(std::int64_t limit) {
  std::vector<double> lam(static_cast<std::size_t>(limit) + 1, 0.0);
  for (std::int64_t p : primes_up_to(limit)) {
    double lp = std::log(static_cast<double>(p));
    for (std::int64_t pk = p; pk <= limit; pk *= p) {
      lam[static_cast<std::size_t>(pk)] = lp;
      if (pk > limit / p) break;
    }
  }
  return lam;
}

double chebyshev_psi(double x) {
  if (!(x >= 1.0)) throw DomainError("chebyshev_psi: x must be >= 1");
  auto n = static_cast<std::int64_t>(std::floor(x));
  double sum = 0.0;
  for (std::int64_t p : primes_up_to(n)) {
    double lp = std::log(static_cast<double>(p));
    for (std::int64_t pk = p; static_cast<double>(pk) <= x; pk *= p) {
      sum += lp;
      if (pk > n / p) break;  // next power would overflow past x anyway
    }
  }
  return sum;
}

std::vector<double> residue_divisor_sums(std::int64_t n, int m, double R) {
  if (n < 2) throw DomainError("residue_divisor_sums: n must be >= 2");
  if (m < 1) throw DomainError("residue_divisor_sums: m must be >= 1");
  if (!(R > 0)) throw DomainError("residue_divisor_sums: R must be > 0");
  std::vector<double> sums(static_cast<std::size_t>(m), 0.0);
  for (std::int64_t d : divisors(n)) {
    if (d < 2 || d >= n) continue;
    sums[static_cast<std::size_t>(d % m)] += std::pow(R, -static_cast<double>(d));
  }
  return sums;
}

ArithTable ArithTable::ones(std::int64_t limit) {
  ArithTable t;
  t.limit = limit;
  t.values.assign(static_cast<std::size_t>(limit) + 1, 1.0);
  t.values[0] = 0.0;
  return t;
}

ArithTable ArithTable::log_n(std::int64_t limit) {
  ArithTable t;
  t.limit = limit;
  t.values.assign(static_cast<std::size_t>(limit) + 1, 0.0);
  for (std::int64_t n = 1; n <= limit; ++n)
    t.values[static_cast<std::size_t>(n)] = std::log(static_cast<double>(n));
  return t;
}

ArithTable ArithTable::mobius(std::int64_t limit) {
  ArithTable t;
  t.limit = limit;
  auto mu = mobius_sieve(limit);
  t.values.assign(mu.begin(), mu.end());
  return t;
}

ArithTable ArithTable::von_mangoldt(std::int64_t limit) {
  ArithTable t;
  t.limit = limit;
  t.values = von_mangoldt_sieve(limit);
  return t;
}

ArithTable ArithTable::tau(std::int64_t limit) {
  ArithTable t;
  t.limit = limit;
  t.values.assign(static_cast<std::size_t>(limit) + 1, 0.0);
  for (std::int64_t d = 1; d <= limit; ++d)
    for (std::int64_t m = d; m <= limit; m += d) t.values[static_cast<std::size_t>(m)] += 1.0;
  return t;
}

ArithTable dirichlet_convolve(const ArithTable& f, const ArithTable& g, std::int64_t limit) {
  if (f.limit < limit || g.limit < limit)
    throw DomainError("dirichlet_convolve: tables must cover 1..limit");
  ArithTable h;
  h.limit = limit;
  h.values.assign(static_cast<std::size_t>(limit) + 1, 0.0);
  for (std::int64_t a = 1; a <= limit; ++a) {
    double fa = f.at(a);
    if (fa == 0.0) continue;
    for (std::int64_t b = 1; a * b <= limit; ++b)
      h.values[static_cast<std::size_t>(a * b)] += fa * g.at(b);
  }
  return h;
}

}  // namespace fdlift::arith
