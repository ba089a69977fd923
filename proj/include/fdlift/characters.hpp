#pragma once

#include <complex>
#include <vector>

#include "fdlift/budget.hpp"

namespace fdlift {

// Dirichlet character mod m as an explicit value table on residues 0..m-1,
// with chi(r) = 0 whenever gcd(r, m) > 1.
struct CharacterTable {
  int modulus = 1;
  std::vector<complexd> values;  // values[r] for r = 0..m-1

  complexd at(std::int64_t n) const {
    auto r = n % modulus;
    if (r < 0) r += modulus;
    return values[static_cast<std::size_t>(r)];
  }
  bool is_principal() const;
  // Checks periodic-table consistency: chi(1)=1, complete multiplicativity
  // on residues, zero exactly on non-units.
  void validate() const;

  static CharacterTable principal(int m);
  static CharacterTable chi4();  // primitive character mod 4
};

// All characters mod m, for m with cyclic unit group (1, 2, 4, p^k, 2p^k).
// Throws DomainError for other moduli.
std::vector<CharacterTable> characters_mod(int m);

int euler_phi(int m);

// tau(chi, a) = sum_r chi(r) e^{-2 pi i a r / m}
complexd gauss_sum(const CharacterTable& chi, int a);

}  // namespace fdlift
