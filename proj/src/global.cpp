#include "qtwist/global.hpp"

#include <stdexcept>

#include "qtwist/characters.hpp"

namespace qtwist {

namespace {

Rational per_prime_density_factor(std::int64_t p) {
  Rational out(p * p - 2 * p - 1, p * p - p - 1);
  out.canonicalize();
  return out;
}

std::int64_t least_nonresidue_prime(std::int64_t q, std::int64_t qstar) {
  // Engineering cap, not a theorem: a suitable prime exists well below it.
  const std::int64_t cap = 2 * qstar * qstar;
  for (std::int64_t p = 2; p < cap; ++p) {
    if (!is_prime(p)) continue;
    if (q % p == 0) continue;
    if (jacobi_symbol(p, qstar) == -1) return p;
  }
  throw std::runtime_error("n0_prediction: no witness prime below the search cap");
}

}  // namespace

LevelFactorization factorize_level(std::int64_t q) {
  if (q < 1) throw std::domain_error("factorize_level: level must be positive");
  LevelFactorization out{q, factorize(q), 0, 1};
  for (const auto& pe : out.factors) {
    if (pe.p % 2 != 0 && pe.e >= 2) {
      ++out.s;
      out.qprime_max *= pe.p;
    }
  }
  return out;
}

DensityReport density(std::int64_t q, std::int64_t qprime) {
  if (q < 1) throw std::domain_error("density: level must be positive");
  if (qprime <= 1 || qprime % 2 == 0 || !is_squarefree(qprime))
    throw std::domain_error("density: twist conductor must be odd, squarefree and > 1");

  DensityReport out{q, qprime, true, Rational(1), {}, true};
  for (const auto& pe : factorize(qprime)) {
    const std::int64_t p = pe.p;
    const int e = (q % p == 0) ? valuation(q, p) : 0;
    Rational factor(1);
    if (e < 2) {
      out.feasible = false;
      factor = 0;
    } else if (e == 2) {
      factor = per_prime_density_factor(p);
    }
    out.factors.push_back({p, factor});
    out.density *= factor;
  }
  out.density.canonicalize();
  return out;
}

MultiplicityReport multiplicity_bound(std::int64_t q) {
  const LevelFactorization level = factorize_level(q);
  if (level.s >= 62) throw std::overflow_error("multiplicity_bound: bound exceeds 2^62");
  MultiplicityReport out{q, level.s, std::int64_t{1} << level.s, Rational(1)};
  for (const auto& pe : level.factors) {
    if (pe.p % 2 != 0 && pe.e == 2) out.density *= per_prime_density_factor(pe.p);
  }
  out.density.canonicalize();
  return out;
}

N0Prediction n0_prediction(std::int64_t q) {
  if (q < 1) throw std::domain_error("n0_prediction: level must be positive");
  if (q % 2 == 0) throw std::domain_error("n0_prediction: level must be odd");
  const LevelFactorization level = factorize_level(q);

  bool squarefree = true;
  for (const auto& pe : level.factors) {
    if (pe.e > 1) squarefree = false;
  }
  if (squarefree) {
    for (std::int64_t p = 2;; ++p) {
      if (is_prime(p) && q % p != 0) return {p, N0Branch::squarefree};
    }
  }

  // Maximize over all nontrivial divisors q* of qprime_max; qprime_max is
  // squarefree, so divisors correspond to subsets of its prime factors.
  const auto primes = distinct_prime_factors(level.qprime_max);
  const std::size_t n = primes.size();
  std::int64_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t qstar = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) qstar *= primes[i];
    }
    best = std::max(best, least_nonresidue_prime(q, qstar));
  }
  return {best, N0Branch::nonsquarefree};
}

BigInt gamma1_multiplicity(std::int64_t p, std::int64_t m) {
  if (p < 3 || !is_prime(p))
    throw std::domain_error("gamma1_multiplicity: p must be an odd prime");
  if (m < 4) throw std::domain_error("gamma1_multiplicity: requires m >= 4");
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(m / 2 - 2));
  return out * (p - 1) * (p - 1);
}

}  // namespace qtwist
