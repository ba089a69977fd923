#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "fdlift/arith.hpp"

using namespace fdlift;
using namespace fdlift::arith;

namespace {

// trial-division oracle, independent of the library path
std::vector<std::int64_t> divisors_brute(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

std::map<std::int64_t, int> factorize_brute(std::int64_t n) {
  std::map<std::int64_t, int> f;
  for (std::int64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[n];
  return f;
}

}  // namespace

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<std::int64_t>{1});
  CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(7) == std::vector<std::int64_t>{1, 7});
  CHECK_THROWS_AS(divisors(0), DomainError);
  for (std::int64_t n = 1; n <= 300; ++n) CHECK(divisors(n) == divisors_brute(n));
}

TEST_CASE("mobius") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  for (std::int64_t n = 1; n <= 500; ++n) {
    auto f = factorize_brute(n);
    bool squarefree = true;
    for (auto& [p, e] : f)
      if (e > 1) squarefree = false;
    int expected = !squarefree ? 0 : (f.size() % 2 == 0 ? 1 : -1);
    CHECK(mobius(n) == expected);
  }
}

TEST_CASE("von_mangoldt") {
  CHECK(von_mangoldt(8) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(von_mangoldt(6) == 0.0);
  CHECK(von_mangoldt(1) == 0.0);
  auto sieved = von_mangoldt_sieve(500);
  for (std::int64_t n = 1; n <= 500; ++n)
    CHECK(sieved[static_cast<std::size_t>(n)] == doctest::Approx(von_mangoldt(n)).epsilon(1e-14));
}

TEST_CASE("dirichlet_convolve examples") {
  const std::int64_t N = 100;
  auto lam = ArithTable::von_mangoldt(N);
  auto one = ArithTable::ones(N);
  auto mu = ArithTable::mobius(N);
  auto logn = ArithTable::log_n(N);

  auto lam1 = dirichlet_convolve(lam, one, N);
  CHECK(lam1.at(12) == doctest::Approx(std::log(12.0)).epsilon(1e-14));

  auto mulog = dirichlet_convolve(mu, logn, N);
  CHECK(mulog.at(6) == doctest::Approx(0.0).epsilon(1e-14));

  auto mulam = dirichlet_convolve(mu, lam, N);
  // brute force over divisors of 6: mu(1)L(6)+mu(2)L(3)+mu(3)L(2)+mu(6)L(1)
  CHECK(mulam.at(6) == doctest::Approx(-std::log(6.0)).epsilon(1e-13));

  ArithTable small = ArithTable::ones(10);
  CHECK_THROWS_AS(dirichlet_convolve(small, one, N), DomainError);
}

TEST_CASE("chebyshev_psi") {
  CHECK(chebyshev_psi(1.5) == 0.0);
  CHECK(chebyshev_psi(2.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  const double expected = 3 * std::log(2.0) + 2 * std::log(3.0) + std::log(5.0) + std::log(7.0);
  CHECK(chebyshev_psi(10.0) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(chebyshev_psi(10.0) == doctest::Approx(7.8320).epsilon(1e-4));
  CHECK_THROWS_AS(chebyshev_psi(0.5), DomainError);
}

TEST_CASE("residue_divisor_sums") {
  auto s = residue_divisor_sums(8, 4, 1.0);
  CHECK(s == std::vector<double>{1.0, 0.0, 1.0, 0.0});
  auto prime = residue_divisor_sums(5, 2, 1.0);
  CHECK(prime == std::vector<double>{0.0, 0.0});
  auto full = residue_divisor_sums(12, 1, 2.0);
  CHECK(full.size() == 1);
  CHECK(full[0] == doctest::Approx(29.0 / 64.0).epsilon(1e-15));
}

TEST_CASE("two_adic_valuation") {
  CHECK(two_adic_valuation(6) == 1);
  CHECK(two_adic_valuation(8) == 3);
  CHECK(two_adic_valuation(7) == 0);
}

TEST_CASE("mobius fundamental property up to 1e4") {
  const std::int64_t N = 10000;
  auto mu = ArithTable::mobius(N);
  auto one = ArithTable::ones(N);
  auto conv = dirichlet_convolve(mu, one, N);
  CHECK(conv.at(1) == 1.0);
  for (std::int64_t n = 2; n <= N; ++n) CHECK(conv.at(n) == 0.0);
}

TEST_CASE("(Lambda*1)(n) = log n up to 1e4") {
  const std::int64_t N = 10000;
  auto lam = ArithTable::von_mangoldt(N);
  auto one = ArithTable::ones(N);
  auto conv = dirichlet_convolve(lam, one, N);
  for (std::int64_t n = 1; n <= N; ++n)
    CHECK(std::abs(conv.at(n) - std::log(static_cast<double>(n))) <= 1e-12);
}

TEST_CASE("(mu*Lambda*1)(n) = Lambda(n) up to 1e4") {
  const std::int64_t N = 10000;
  auto mu = ArithTable::mobius(N);
  auto lam = ArithTable::von_mangoldt(N);
  auto one = ArithTable::ones(N);
  auto conv = dirichlet_convolve(dirichlet_convolve(mu, lam, N), one, N);
  auto direct = von_mangoldt_sieve(N);
  for (std::int64_t n = 1; n <= N; ++n)
    CHECK(std::abs(conv.at(n) - direct[static_cast<std::size_t>(n)]) <= 1e-12);
}

TEST_CASE("sum of log d over divisors equals (tau*Lambda)(n) up to 1e4") {
  const std::int64_t N = 10000;
  auto tau = ArithTable::tau(N);
  auto lam = ArithTable::von_mangoldt(N);
  auto taulam = dirichlet_convolve(tau, lam, N);
  auto one = ArithTable::ones(N);
  auto logn = ArithTable::log_n(N);
  auto divlog = dirichlet_convolve(logn, one, N);  // sum_{d|n} log d
  for (std::int64_t n = 1; n <= N; ++n) CHECK(std::abs(divlog.at(n) - taulam.at(n)) <= 1e-12);
}

TEST_CASE("residue sums with m=1 reproduce the proper-divisor sum") {
  for (std::int64_t n : {4, 6, 12, 30, 97, 360}) {
    const double R = 1.7;
    auto s = residue_divisor_sums(n, 1, R);
    double direct = 0.0;
    for (std::int64_t d : divisors_brute(n))
      if (d >= 2 && d < n) direct += std::pow(R, -static_cast<double>(d));
    CHECK(s[0] == doctest::Approx(direct).epsilon(1e-14));
  }
}

TEST_CASE("prime helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(is_prime_power(8));
  CHECK(is_prime_power(27));
  CHECK_FALSE(is_prime_power(12));
  CHECK(primes_up_to(30) ==
        std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}
