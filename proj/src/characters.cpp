#include "qtwist/characters.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qtwist/intmath.hpp"

namespace qtwist {

std::int64_t canonical_primitive_root(std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw std::domain_error("canonical_primitive_root: p must be an odd prime");
  const auto qs = distinct_prime_factors(p - 1);
  for (std::int64_t g = 2; g < p; ++g) {
    bool primitive = true;
    for (std::int64_t q : qs) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;
    // g generates mod p; keep it only if it also generates mod p^2.
    if (powmod(g, p - 1, p * p) != 1) return g;
  }
  throw std::logic_error("canonical_primitive_root: no root found");
}

UnitCharacter::UnitCharacter(std::int64_t p, std::int64_t level, std::int64_t exponent)
    : p_(p), level_(level), exponent_(exponent) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::domain_error("UnitCharacter: p must be an odd prime");
  if (level < 0) throw std::domain_error("UnitCharacter: level must be nonnegative");
  const std::int64_t n = group_order();
  if (exponent < 0 || exponent >= n)
    throw std::domain_error("UnitCharacter: exponent out of range");
}

std::int64_t UnitCharacter::group_order() const {
  if (level_ == 0) return 1;
  return checked_pow(p_, static_cast<int>(level_ - 1)) * (p_ - 1);
}

std::int64_t UnitCharacter::conductor() const {
  if (exponent_ == 0) return 0;
  const int v = valuation(exponent_, p_);
  return std::max<std::int64_t>(1, level_ - v);
}

std::int64_t UnitCharacter::order() const {
  const std::int64_t n = group_order();
  return n / std::gcd(n, exponent_);
}

UnitCharacter UnitCharacter::promoted(std::int64_t level) const {
  if (level < level_) throw std::domain_error("UnitCharacter::promoted: cannot lower the level");
  if (level == level_) return *this;
  const std::int64_t scale = checked_pow(p_, static_cast<int>(level - std::max<std::int64_t>(level_, 1)));
  return UnitCharacter(p_, level, exponent_ * scale);
}

UnitCharacter UnitCharacter::reduced() const {
  const std::int64_t c = conductor();
  if (c == level_) return *this;
  const std::int64_t scale = checked_pow(p_, static_cast<int>(level_ - std::max<std::int64_t>(c, 1)));
  return UnitCharacter(p_, c, exponent_ / scale);
}

UnitCharacter UnitCharacter::inverse() const {
  const std::int64_t n = group_order();
  return UnitCharacter(p_, level_, (n - exponent_) % n);
}

UnitCharacter UnitCharacter::pow(std::int64_t n) const {
  const std::int64_t group = group_order();
  std::int64_t e = n % group;
  if (e < 0) e += group;
  return UnitCharacter(p_, level_, mulmod(exponent_, e, group));
}

UnitCharacter operator*(const UnitCharacter& a, const UnitCharacter& b) {
  if (a.p_ != b.p_) throw std::domain_error("UnitCharacter: mismatched residue primes");
  const std::int64_t level = std::max(a.level_, b.level_);
  const UnitCharacter pa = a.promoted(level);
  const UnitCharacter pb = b.promoted(level);
  const std::int64_t n = pa.group_order();
  return UnitCharacter(a.p_, level, (pa.exponent_ + pb.exponent_) % n);
}

bool operator==(const UnitCharacter& a, const UnitCharacter& b) {
  if (a.p_ != b.p_) return false;
  const UnitCharacter ra = a.reduced();
  const UnitCharacter rb = b.reduced();
  return ra.level_ == rb.level_ && ra.exponent_ == rb.exponent_;
}

UnitCharacter quadratic_unit_character(std::int64_t p) {
  if (p == 2) throw std::domain_error("quadratic_unit_character: no quadratic character at p = 2");
  if (p < 3 || !is_prime(p)) throw std::domain_error("quadratic_unit_character: p must be an odd prime");
  return UnitCharacter(p, 1, (p - 1) / 2);
}

CharacterList enumerate_unit_characters(std::int64_t p, std::int64_t level,
                                        bool only_primitive) {
  if (level < 1) throw std::domain_error("enumerate_unit_characters: level must be >= 1");
  const UnitCharacter probe(p, level, 0);
  const std::int64_t n = probe.group_order();
  CharacterList out;
  out.characters.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    UnitCharacter chi(p, level, k);
    if (only_primitive && !chi.is_primitive()) continue;
    out.characters.push_back(chi);
  }
  out.count = static_cast<std::int64_t>(out.characters.size());
  return out;
}

namespace {

constexpr long double kTwoPi = 2.0L * 3.14159265358979323846264338327950288L;

// e^{2 pi i u / modulus} for u = 0..modulus-1, memoized per modulus so that
// sweeps over whole character groups pay the trigonometry once.
std::shared_ptr<const std::vector<std::complex<double>>> additive_table(std::int64_t modulus) {
  static std::mutex mutex;
  static std::map<std::int64_t, std::shared_ptr<const std::vector<std::complex<double>>>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(modulus); it != cache.end()) return it->second;
  }
  auto table = std::make_shared<std::vector<std::complex<double>>>();
  table->reserve(static_cast<std::size_t>(modulus));
  for (std::int64_t u = 0; u < modulus; ++u) {
    const long double angle = kTwoPi * static_cast<long double>(u) / modulus;
    table->push_back({static_cast<double>(std::cos(angle)),
                      static_cast<double>(std::sin(angle))});
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(modulus, std::move(table)).first->second;
}

}  // namespace

std::complex<double> gauss_sum(const UnitCharacter& chi) {
  if (chi.level() == 0 || !chi.is_primitive())
    throw std::domain_error("gauss_sum: character must be primitive at level >= 1");
  const std::int64_t p = chi.prime();
  const std::int64_t level = chi.level();
  const std::int64_t modulus = checked_pow(p, static_cast<int>(level));
  const std::int64_t n = chi.group_order();
  const std::int64_t g = canonical_primitive_root(p);
  const std::int64_t k = chi.exponent();

  // Walk u = g^j over the unit group; conj(chi)(g^j) = e^{-2 pi i k j / N}
  // advances by a fixed step, resynced against exact trigonometry every few
  // thousand terms to keep the drift far below the acceptance tolerance.
  const long double step_angle = -kTwoPi * static_cast<long double>(k) / n;
  const std::complex<long double> step(std::cos(step_angle), std::sin(step_angle));
  std::complex<long double> character_value(1.0L, 0.0L);
  constexpr std::int64_t kResyncPeriod = 4096;

  const bool use_table = modulus <= 1'000'000;
  std::shared_ptr<const std::vector<std::complex<double>>> table;
  if (use_table) table = additive_table(modulus);

  std::complex<long double> sum(0.0L, 0.0L);
  std::int64_t u = 1;
  std::int64_t kj = 0;  // k*j mod N
  for (std::int64_t j = 0; j < n; ++j) {
    if (j % kResyncPeriod == 0) {
      const long double angle = -kTwoPi * static_cast<long double>(kj) / n;
      character_value = {std::cos(angle), std::sin(angle)};
    }
    if (use_table) {
      const auto& e = (*table)[static_cast<std::size_t>(u)];
      sum += character_value * std::complex<long double>(e.real(), e.imag());
    } else {
      const long double angle = kTwoPi * static_cast<long double>(u) / modulus;
      sum += character_value * std::complex<long double>(std::cos(angle), std::sin(angle));
    }
    character_value *= step;
    u = mulmod(u, g, modulus);
    kj += k;
    if (kj >= n) kj -= n;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

int jacobi_symbol(std::int64_t a, std::int64_t n) {
  if (n < 1 || n % 2 == 0) throw std::domain_error("jacobi_symbol: modulus must be odd and positive");
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

PadicCharacter::PadicCharacter(UnitCharacter unit, Rational phase, bool generic)
    : unit_(std::move(unit)), phase_(rational_mod_one(phase)), generic_(generic) {}

PadicCharacter PadicCharacter::trivial(std::int64_t p) {
  return PadicCharacter(UnitCharacter(p, 0, 0));
}

PadicCharacter PadicCharacter::unramified(std::int64_t p, const Rational& phase, bool generic) {
  return PadicCharacter(UnitCharacter(p, 0, 0), phase, generic);
}

PadicCharacter PadicCharacter::ramified_quadratic(std::int64_t p) {
  return PadicCharacter(quadratic_unit_character(p));
}

bool PadicCharacter::is_trivial() const {
  return unit_.is_trivial() && phase_ == 0 && !generic_;
}

bool PadicCharacter::is_quadratic() const {
  if (generic_) return false;
  if (unit_.order() > 2) return false;
  return phase_ == 0 || phase_ == Rational(1, 2);
}

PadicCharacter PadicCharacter::inverse() const {
  return PadicCharacter(unit_.inverse(), rational_mod_one(-phase_), generic_);
}

PadicCharacter PadicCharacter::pow(std::int64_t n) const {
  return PadicCharacter(unit_.pow(n), rational_mod_one(phase_ * Rational(n)),
                        generic_ && (n % 2 != 0));
}

PadicCharacter operator*(const PadicCharacter& a, const PadicCharacter& b) {
  return PadicCharacter(a.unit_ * b.unit_, rational_mod_one(a.phase_ + b.phase_),
                        a.generic_ != b.generic_);
}

bool operator==(const PadicCharacter& a, const PadicCharacter& b) {
  return a.unit_ == b.unit_ && a.phase_ == b.phase_ && a.generic_ == b.generic_;
}

int compare_characters(const PadicCharacter& a, const PadicCharacter& b) {
  const UnitCharacter ra = a.unit().reduced();
  const UnitCharacter rb = b.unit().reduced();
  if (ra.conductor() != rb.conductor()) return ra.conductor() < rb.conductor() ? -1 : 1;
  if (ra.exponent() != rb.exponent()) return ra.exponent() < rb.exponent() ? -1 : 1;
  const int ph = cmp(a.phase(), b.phase());
  if (ph != 0) return ph;
  if (a.generic() != b.generic()) return a.generic() ? 1 : -1;
  return 0;
}

}  // namespace qtwist
