#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fdlift/fejer.hpp"

using namespace fdlift;

namespace {
constexpr double kPi = std::numbers::pi;

// high-order central-difference stencils, O(h^4)
double fd_deriv(double x, long i, int k, double h) {
  auto f = [&](double t) { return phi_series(complexd(t, 0.0), i).real(); };
  switch (k) {
    case 1:
      return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
    case 2:
      return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) /
             (12 * h * h);
    case 3:
      return (f(x + 3 * h) / 8 - f(x + 2 * h) + 13 * f(x + h) / 8 - 13 * f(x - h) / 8 +
              f(x - 2 * h) - f(x - 3 * h) / 8) /
             (h * h * h);
    default:
      return 0.0;
  }
}
}  // namespace

TEST_CASE("fejer_F at integers and simple points") {
  CHECK(fejer_F(complexd(6, 0), 3).real() == doctest::Approx(9.0).epsilon(1e-15));
  CHECK(std::abs(fejer_F(complexd(7, 0), 3)) == 0.0);
  // (sin(pi/2)/sin(pi/4))^2 = 2
  CHECK(fejer_F(complexd(0.5, 0), 2).real() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(fejer_F(complexd(3.7, 0.2), 1) == complexd(1.0));
}

TEST_CASE("phi values") {
  CHECK(phi(complexd(12, 0), 4) == complexd(1.0));
  CHECK(phi(complexd(12, 0), 5) == complexd(0.0));
  const double expected = 1.0 / (16.0 * std::pow(std::sin(kPi / 8.0), 2.0));
  CHECK(phi(complexd(0.5, 0), 4).real() == doctest::Approx(expected).epsilon(1e-14));
  CHECK(phi(complexd(0.5, 0), 4).real() == doctest::Approx(0.426777).epsilon(1e-6));
}

TEST_CASE("phi_infty values") {
  CHECK(phi_infty(complexd(0, 0)) == complexd(1.0));
  CHECK(std::abs(phi_infty(complexd(3, 0))) <= 1e-30);
  CHECK(phi_infty(complexd(0.5, 0)).real() ==
        doctest::Approx(std::pow(2.0 / kPi, 2.0)).epsilon(1e-14));
  // Taylor branch continuity near zero
  CHECK(phi_infty(complexd(9e-5, 0)).real() ==
        doctest::Approx(std::pow(std::sin(kPi * 9e-5) / (kPi * 9e-5), 2.0)).epsilon(1e-13));
}

TEST_CASE("phi_deriv closed forms at integers") {
  CHECK(phi_deriv(5.0, 2, 2) == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-14));
  CHECK(phi_deriv(5.0, 2, 2) == doctest::Approx(4.9348).epsilon(1e-4));
  CHECK(phi_deriv(6.0, 3, 2) == doctest::Approx(-16.0 * kPi * kPi / 27.0).epsilon(1e-14));
  CHECK(phi_deriv(5.0, 3, 1) == 0.0);
  CHECK_THROWS_AS(phi_deriv(1.3, 4, 4), DomainError);
}

TEST_CASE("divisor filter is exact for i <= 50, n <= 200") {
  for (long i = 2; i <= 50; ++i)
    for (long n = 0; n <= 200; ++n) {
      const complexd v = phi(complexd(static_cast<double>(n), 0.0), i);
      CHECK(v == ((n % i == 0) ? complexd(1.0) : complexd(0.0)));
    }
}

TEST_CASE("cosine-sum and sine-quotient branches agree at random complex points") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> re(-20.0, 20.0), im(-20.0, 20.0);
  std::uniform_int_distribution<long> order(2, 40);
  for (int trial = 0; trial < 1000; ++trial) {
    const complexd z(re(rng), im(rng));
    const long i = order(rng);
    const complexd den = std::sin(kPi * z / static_cast<double>(i));
    if (std::abs(den) < 1e-3) continue;  // quotient branch ill-conditioned by design there
    const complexd a = fejer_F_cosine(z, i);
    const complexd b = fejer_F_quotient(z, i);
    const double scale = std::max(1.0, std::abs(a));
    CHECK(std::abs(a - b) / scale <= 1e-11);
  }
}

TEST_CASE("growth bound |F(x+iy,i)| <= i^2 cosh(2 pi y)") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> re(-50.0, 50.0), im(-3.0, 3.0);
  std::uniform_int_distribution<long> order(2, 40);
  for (int trial = 0; trial < 500; ++trial) {
    const complexd z(re(rng), im(rng));
    const long i = order(rng);
    const double bound = static_cast<double>(i) * static_cast<double>(i) *
                         std::cosh(2.0 * kPi * std::abs(z.imag()));
    CHECK(std::abs(fejer_F(z, i)) <= bound * (1.0 + 1e-10));
  }
}

TEST_CASE("dyadic cascade phi_2m = phi_m cos^2(pi z / 2m)") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> re(-10.0, 10.0), im(-2.0, 2.0);
  for (long m = 1; m <= 25; ++m)
    for (int trial = 0; trial < 40; ++trial) {
      const complexd z(re(rng), im(rng));
      const complexd lhs = phi_series(z, 2 * m);
      const complexd c = std::cos(kPi * z / (2.0 * static_cast<double>(m)));
      const complexd rhs = phi_series(z, m) * c * c;
      const double scale = std::max(1.0, std::abs(lhs));
      CHECK(std::abs(lhs - rhs) / scale <= 1e-11);
    }
}

TEST_CASE("first derivative vanishes at every integer") {
  for (long i = 2; i <= 40; ++i)
    for (long n = -5; n <= 40; ++n) CHECK(phi_deriv(static_cast<double>(n), i, 1) == 0.0);
}

TEST_CASE("analytic derivatives match finite differences off integers") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> xs(0.07, 19.0);
  std::uniform_int_distribution<long> order(2, 40);
  const double steps[4] = {0.0, 1e-3, 1e-3, 3e-3};
  int tested = 0;
  while (tested < 100) {
    double x = xs(rng);
    if (std::abs(x - std::round(x)) < 0.05) continue;
    const long i = order(rng);
    if (std::abs(std::sin(kPi * x / static_cast<double>(i))) < 0.05) continue;
    ++tested;
    for (int k = 1; k <= 3; ++k) {
      const double analytic = phi_deriv(x, i, k);
      const double fd = fd_deriv(x, i, k, steps[k]);
      CHECK(std::abs(analytic - fd) <= 1e-6 * std::max(1.0, std::abs(analytic)));
    }
  }
}

TEST_CASE("analytic and cosine-sum derivative paths agree") {
  std::mt19937 rng(31337);
  std::uniform_real_distribution<double> xs(0.1, 30.0);
  std::uniform_int_distribution<long> order(2, 30);
  for (int trial = 0; trial < 300; ++trial) {
    const double x = xs(rng);
    const long i = order(rng);
    for (int k = 0; k <= 3; ++k) {
      const double a = phi_deriv(x, i, k);
      const double c = phi_deriv_cosine(x, i, k);
      CHECK(std::abs(a - c) <= 1e-8 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST_CASE("trigonometric sums for m not dividing n") {
  for (long m = 2; m <= 30; ++m)
    for (long n = 1; n <= 3 * m; ++n) {
      if (n % m == 0) continue;
      double c0 = 0.0, c1 = 0.0;
      for (long k = 1; k < m; ++k) {
        const double c = std::cos(2.0 * kPi * static_cast<double>(k) * static_cast<double>(n) /
                                  static_cast<double>(m));
        c0 += c;
        c1 += static_cast<double>(k) * c;
      }
      CHECK(std::abs(c0 - (-1.0)) <= 1e-12);
      CHECK(std::abs(c1 - (-static_cast<double>(m) / 2.0)) <= 1e-12);
    }
}

TEST_CASE("templated real kernel agrees with the complex path") {
  for (double x : {0.3, 2.7, 5.49, 10.501}) {
    for (long i : {2L, 3L, 7L, 19L}) {
      CHECK(phi_real<double>(x, i, false) ==
            doctest::Approx(phi_series(complexd(x, 0.0), i).real()).epsilon(1e-14));
    }
  }
}
