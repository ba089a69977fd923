#include "fdlift/fejer.hpp"

#include <numbers>

namespace fdlift {

namespace {
constexpr double kPi = std::numbers::pi;
}

complexd fejer_F_cosine(complexd z, long i) {
  if (i == 1) return 1.0;
  const complexd w = 2.0 * kPi * z / static_cast<double>(i);
  complexd sum = static_cast<double>(i);
  for (long k = 1; k < i; ++k)
    sum += 2.0 * static_cast<double>(i - k) * std::cos(static_cast<double>(k) * w);
  return sum;
}

complexd fejer_F_quotient(complexd z, long i) {
  if (i == 1) return 1.0;
  const complexd r = std::sin(kPi * z) / std::sin(kPi * z / static_cast<double>(i));
  return r * r;
}

complexd fejer_F(complexd z, long i) {
  if (i == 1) return 1.0;
  if (near_integer(z)) {
    const auto n = nearest_integer(z.real());
    return (n % i == 0) ? complexd(static_cast<double>(i) * static_cast<double>(i)) : complexd(0.0);
  }
  const complexd den = std::sin(kPi * z / static_cast<double>(i));
  if (std::abs(den) < kNearPoleSwitch) return fejer_F_cosine(z, i);
  const complexd r = std::sin(kPi * z) / den;
  return r * r;
}

complexd phi(complexd z, long i) {
  if (i == 1) return 1.0;
  if (near_integer(z)) {
    const auto n = nearest_integer(z.real());
    return (n % i == 0) ? complexd(1.0) : complexd(0.0);
  }
  return phi_series(z, i);
}

complexd phi_series(complexd z, long i) {
  if (i == 1) return 1.0;
  const double ii = static_cast<double>(i) * static_cast<double>(i);
  const complexd den = std::sin(kPi * z / static_cast<double>(i));
  if (std::abs(den) < kNearPoleSwitch) return fejer_F_cosine(z, i) / ii;
  const complexd r = std::sin(kPi * z) / den;
  return r * r / ii;
}

complexd phi_infty(complexd z) {
  const complexd w = kPi * z;
  if (std::abs(w) < 1e-4) {
    const complexd y = w * w;
    return 1.0 - y / 3.0 + 2.0 * y * y / 45.0 - y * y * y / 315.0;
  }
  const complexd r = std::sin(w) / w;
  return r * r;
}

double phi_deriv_cosine(double x, long i, int k) {
  if (k < 0 || k > 3) throw DomainError("phi_deriv: k must be in 0..3");
  if (i == 1) return (k == 0) ? 1.0 : 0.0;
  const double ii = static_cast<double>(i) * static_cast<double>(i);
  double sum = (k == 0) ? static_cast<double>(i) : 0.0;
  for (long j = 1; j < i; ++j) {
    const double w = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(i);
    const double c = 2.0 * static_cast<double>(i - j) * std::pow(w, k);
    const double arg = w * x;
    switch (k) {
      case 0: sum += c * std::cos(arg); break;
      case 1: sum -= c * std::sin(arg); break;
      case 2: sum -= c * std::cos(arg); break;
      case 3: sum += c * std::sin(arg); break;
    }
  }
  return sum / ii;
}

double phi_deriv(double x, long i, int k) {
  if (k < 0 || k > 3) throw DomainError("phi_deriv: k must be in 0..3");
  if (i == 1) return (k == 0) ? 1.0 : 0.0;

  if (near_integer(x)) {
    const auto n = nearest_integer(x);
    const bool divides = (n % i == 0);
    switch (k) {
      case 0: return divides ? 1.0 : 0.0;
      case 1: return 0.0;
      case 2: {
        if (divides) return -(2.0 * kPi * kPi / 3.0) * (1.0 - 1.0 / (static_cast<double>(i) * static_cast<double>(i)));
        const double s = std::sin(kPi * static_cast<double>(n) / static_cast<double>(i));
        return 2.0 * kPi * kPi / (static_cast<double>(i) * static_cast<double>(i) * s * s);
      }
      case 3: return phi_deriv_cosine(x, i, 3);
    }
  }

  const double c = kPi / static_cast<double>(i);
  const double den = std::sin(c * x);
  if (std::abs(den) < kNearPoleSwitch) return phi_deriv_cosine(x, i, k);

  // Leibniz on u * v with u = sin^2(pi x), v = 1/(i^2 sin^2(pi x / i)).
  const double ii = static_cast<double>(i) * static_cast<double>(i);
  const double u = std::sin(kPi * x) * std::sin(kPi * x);
  const double u1 = kPi * std::sin(2.0 * kPi * x);
  const double u2 = 2.0 * kPi * kPi * std::cos(2.0 * kPi * x);
  const double u3 = -4.0 * kPi * kPi * kPi * std::sin(2.0 * kPi * x);

  const double s = den, co = std::cos(c * x);
  const double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;
  const double v = 1.0 / (ii * s2);
  const double v1 = -2.0 * c * co / (ii * s3);
  const double v2 = (2.0 * c * c / s2 + 6.0 * c * c * co * co / s4) / ii;
  const double v3 = (-16.0 * c * c * c * co / s3 - 24.0 * c * c * c * co * co * co / s5) / ii;

  switch (k) {
    case 0: return u * v;
    case 1: return u1 * v + u * v1;
    case 2: return u2 * v + 2.0 * u1 * v1 + u * v2;
    default: return u3 * v + 3.0 * u2 * v1 + 3.0 * u1 * v2 + u * v3;
  }
}

}  // namespace fdlift
