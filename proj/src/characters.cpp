#include "fdlift/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace fdlift {

namespace {
constexpr double kPi = std::numbers::pi;

int mulmod(int a, int b, int m) { return static_cast<int>((static_cast<long long>(a) * b) % m); }

int order_mod(int g, int m) {
  int x = g % m, ord = 1;
  while (x != 1) {
    x = mulmod(x, g, m);
    ++ord;
    if (ord > m) return -1;
  }
  return ord;
}
}  // namespace

int euler_phi(int m) {
  int result = m, n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

bool CharacterTable::is_principal() const {
  for (int r = 0; r < modulus; ++r) {
    const bool unit = std::gcd(r, modulus) == 1;
    const complexd expect = unit ? complexd(1.0) : complexd(0.0);
    if (std::abs(values[static_cast<std::size_t>(r)] - expect) > 1e-12) return false;
  }
  return true;
}

void CharacterTable::validate() const {
  if (modulus < 1 || values.size() != static_cast<std::size_t>(modulus))
    throw DomainError("CharacterTable: table size must equal the modulus");
  for (int r = 0; r < modulus; ++r) {
    const bool unit = std::gcd(r, modulus) == 1 || modulus == 1;
    const double mag = std::abs(values[static_cast<std::size_t>(r)]);
    if (unit && std::abs(mag - 1.0) > 1e-12)
      throw DomainError("CharacterTable: unit residues must have |chi| = 1");
    if (!unit && mag > 1e-12)
      throw DomainError("CharacterTable: chi must vanish on non-unit residues");
  }
  if (std::abs(at(1) - complexd(1.0)) > 1e-12) throw DomainError("CharacterTable: chi(1) must be 1");
  for (int a = 0; a < modulus; ++a)
    for (int b = 0; b < modulus; ++b) {
      const complexd lhs = at(static_cast<std::int64_t>(a) * b);
      const complexd rhs = at(a) * at(b);
      if (std::abs(lhs - rhs) > 1e-10) throw DomainError("CharacterTable: not multiplicative");
    }
}

CharacterTable CharacterTable::principal(int m) {
  CharacterTable t;
  t.modulus = m;
  t.values.assign(static_cast<std::size_t>(m), complexd(0.0));
  for (int r = 0; r < m; ++r)
    if (std::gcd(r, m) == 1 || m == 1) t.values[static_cast<std::size_t>(r)] = 1.0;
  return t;
}

CharacterTable CharacterTable::chi4() {
  CharacterTable t;
  t.modulus = 4;
  t.values = {complexd(0.0), complexd(1.0), complexd(0.0), complexd(-1.0)};
  return t;
}

std::vector<CharacterTable> characters_mod(int m) {
  if (m < 1) throw DomainError("characters_mod: m must be >= 1");
  if (m == 1) return {CharacterTable::principal(1)};
  const int phi = euler_phi(m);
  int g = -1;
  for (int cand = 2; cand < m; ++cand) {
    if (std::gcd(cand, m) != 1) continue;
    if (order_mod(cand, m) == phi) {
      g = cand;
      break;
    }
  }
  if (g < 0 && phi == 1) g = 1 % m;  // m = 2: trivial unit group
  if (g < 0) throw DomainError("characters_mod: unit group mod m is not cyclic");

  // index table: g^k -> k
  std::vector<int> dlog(static_cast<std::size_t>(m), -1);
  int x = 1;
  for (int k = 0; k < phi; ++k) {
    dlog[static_cast<std::size_t>(x)] = k;
    x = mulmod(x, g, m);
  }

  std::vector<CharacterTable> chars;
  for (int j = 0; j < phi; ++j) {
    CharacterTable t;
    t.modulus = m;
    t.values.assign(static_cast<std::size_t>(m), complexd(0.0));
    for (int r = 0; r < m; ++r) {
      const int k = dlog[static_cast<std::size_t>(r)];
      if (k >= 0) t.values[static_cast<std::size_t>(r)] = std::polar(1.0, 2.0 * kPi * j * k / phi);
    }
    t.validate();
    chars.push_back(std::move(t));
  }
  return chars;
}

complexd gauss_sum(const CharacterTable& chi, int a) {
  const int m = chi.modulus;
  complexd sum = 0.0;
  for (int r = 1; r <= m; ++r)
    sum += chi.at(r) * std::polar(1.0, -2.0 * kPi * static_cast<double>(a) * r / m);
  return sum;
}

}  // namespace fdlift
