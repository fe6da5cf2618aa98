#pragma once

#include <cstdint>

#include "qtwist/rational.hpp"

namespace qtwist {

// Real quadratic field Q(sqrt(D)) for squarefree D > 1, with the
// fundamental unit of the maximal order written eps0 = (a + b sqrt(D))/2,
// so that (a^2 - D b^2)/4 = unit_norm = +-1 and eps0 > 1 is minimal.
struct RealQuadraticField {
  std::int64_t D;
  std::int64_t disc;  // D if D = 1 mod 4, else 4D
  BigInt a;
  BigInt b;
  int unit_norm;
  double regulator;  // log eps0
};

// Continued-fraction expansion of sqrt(D) (or (1 + sqrt(D))/2 when
// D = 1 mod 4) in exact integer arithmetic.
RealQuadraticField fundamental_unit(std::int64_t D);

struct MonomialLatticeReport {
  std::int64_t D;
  double phi_epsilon0;  // 2 log eps0, the generator of the unit lattice image
  double spacing;       // 2 pi / phi_epsilon0 = pi / log eps0
};

// Spacing of admissible spectral parameters per finite-character coset:
// the unit lattice has rank 1 over Q, generated by phi(eps0) = 2 log eps0.
MonomialLatticeReport monomial_spacing(std::int64_t D);

// Upper bound on monomial spectral parameters t with |t| <= T across the
// given number of finite-character cosets: cosets * (floor(2T/spacing) + 1).
// Linear in T, against the quadratic growth of the full spectral count.
std::int64_t monomial_count_bound(std::int64_t D, double T, std::int64_t cosets);

}  // namespace qtwist
