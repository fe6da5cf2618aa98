#include "qtwist/intmath.hpp"

#include <cmath>
#include <stdexcept>

namespace qtwist {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t mod) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % mod);
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  if (mod <= 0) throw std::domain_error("powmod: modulus must be positive");
  std::int64_t result = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::int64_t isqrt64(std::int64_t n) {
  if (n < 0) throw std::domain_error("isqrt64: negative argument");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

int valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) throw std::domain_error("valuation: zero argument");
  if (p < 2) throw std::domain_error("valuation: base must be >= 2");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::int64_t checked_pow(std::int64_t base, int exp) {
  constexpr std::int64_t kLimit = std::int64_t{1} << 62;
  std::int64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && result > kLimit / base)
      throw std::overflow_error("checked_pow: result exceeds 2^62");
    result *= base;
  }
  return result;
}

std::vector<std::int64_t> distinct_prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (const auto& pe : factorize(n)) out.push_back(pe.p);
  return out;
}

std::vector<PrimePower> factorize(std::int64_t n) {
  if (n < 1) throw std::domain_error("factorize: argument must be positive");
  std::vector<PrimePower> out;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_squarefree(std::int64_t n) {
  if (n < 1) return false;
  for (const auto& pe : factorize(n)) {
    if (pe.e > 1) return false;
  }
  return true;
}

}  // namespace qtwist
