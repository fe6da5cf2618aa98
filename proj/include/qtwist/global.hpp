#pragma once

#include <cstdint>
#include <vector>

#include "qtwist/intmath.hpp"
#include "qtwist/rational.hpp"

namespace qtwist {

struct LevelFactorization {
  std::int64_t q;
  std::vector<PrimePower> factors;
  int s;                    // number of distinct odd primes p with p^2 | q
  std::int64_t qprime_max;  // largest squarefree d | q with p | d => p odd, p^2 | q
};

LevelFactorization factorize_level(std::int64_t q);

struct DensityFactor {
  std::int64_t p;
  Rational factor;
};

struct DensityReport {
  std::int64_t q;
  std::int64_t qprime;
  bool feasible;  // p^2 | q for every p | qprime
  Rational density;
  std::vector<DensityFactor> factors;
  bool intersection_same_density;
};

// Density of newforms of level q whose twist by the primitive quadratic
// character mod qprime is a distinct newform of the same level:
// prod over p | qprime with p^2 || q of (1 - p/(p^2 - p - 1)), empty
// product 1; zero when some p | qprime has p^2 not dividing q.
// Requires qprime odd, squarefree, > 1; q may be even.
DensityReport density(std::int64_t q, std::int64_t qprime);

struct MultiplicityReport {
  std::int64_t q;
  int s;
  std::int64_t bound;  // 2^s
  Rational density;    // of the eigenvalue set attaining the bound
};

MultiplicityReport multiplicity_bound(std::int64_t q);

enum class N0Branch { squarefree, nonsquarefree };

struct N0Prediction {
  std::int64_t value;
  N0Branch branch;
};

// Predicted least prime bound distinguishing nonmonomial newforms of odd
// level q by Hecke eigenvalues: the least prime not dividing q when q is
// squarefree; otherwise the max over divisors q* > 1 of qprime_max of the
// least prime p with p not dividing q and (p/q*) = -1.
N0Prediction n0_prediction(std::int64_t q);

// p^{floor(m/2) - 2} (p-1)^2, the number of primitive characters mod
// p^{floor(m/2)}: an eigenvalue multiplicity lower bound for the new
// spectrum at level p^m with all characters allowed.  Requires m >= 4.
BigInt gamma1_multiplicity(std::int64_t p, std::int64_t m);

}  // namespace qtwist
