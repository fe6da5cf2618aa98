#pragma once

#include <cstdint>
#include <vector>

namespace qtwist {

struct PrimePower {
  std::int64_t p;
  int e;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t mod);
std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t mod);

bool is_prime(std::int64_t n);

// Largest integer r with r*r <= n.
std::int64_t isqrt64(std::int64_t n);

// Exponent of p in n; requires n != 0, p >= 2.
int valuation(std::int64_t n, std::int64_t p);

// base^exp, throwing std::overflow_error if the result exceeds 2^62.
std::int64_t checked_pow(std::int64_t base, int exp);

std::vector<std::int64_t> distinct_prime_factors(std::int64_t n);

// Trial-division factorization, ascending primes; n >= 1.
std::vector<PrimePower> factorize(std::int64_t n);

bool is_squarefree(std::int64_t n);

}  // namespace qtwist
