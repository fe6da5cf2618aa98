#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qtwist/rational.hpp"

namespace qtwist {

// Least positive primitive root mod p that is also a primitive root mod p^2;
// such a root generates (Z/p^m)^x for every m >= 1, which makes character
// encodings reproducible across runs.
std::int64_t canonical_primitive_root(std::int64_t p);

// Multiplicative character of (Z/p^m)^x, p an odd prime, encoded by its
// exponent k against the canonical primitive root g:
//
//     chi(g) = e^{2 pi i k / N},   N = p^{m-1}(p-1)   (N = 1 when m = 0).
//
// The presentation level m may exceed the conductor exponent; arithmetic
// keeps the maximum level of its operands and equality compares the
// conductor-level reductions.
class UnitCharacter {
 public:
  UnitCharacter(std::int64_t p, std::int64_t level, std::int64_t exponent);

  std::int64_t prime() const { return p_; }
  std::int64_t level() const { return level_; }
  std::int64_t exponent() const { return exponent_; }
  std::int64_t group_order() const;  // N above

  // Least f with chi trivial on the image of 1 + p^f; <= level always.
  std::int64_t conductor() const;

  bool is_trivial() const { return exponent_ == 0; }
  bool is_primitive() const { return conductor() == level_; }
  std::int64_t order() const;

  // Same character presented at a level >= the current one.
  UnitCharacter promoted(std::int64_t level) const;
  // Same character presented at its conductor level.
  UnitCharacter reduced() const;

  UnitCharacter inverse() const;
  UnitCharacter pow(std::int64_t n) const;
  friend UnitCharacter operator*(const UnitCharacter& a, const UnitCharacter& b);

  // Equality as characters of Z_p^x (presentation level ignored).
  friend bool operator==(const UnitCharacter& a, const UnitCharacter& b);

 private:
  std::int64_t p_;
  std::int64_t level_;
  std::int64_t exponent_;
};

// The unique nontrivial quadratic character of (Z/p)^x: level 1,
// exponent (p-1)/2, conductor exponent 1.  p = 2 is rejected: there is
// no quadratic character of odd conductor at the dyadic place.
UnitCharacter quadratic_unit_character(std::int64_t p);

struct CharacterList {
  std::vector<UnitCharacter> characters;
  std::int64_t count;
};

// All characters at level m >= 1, or only those of conductor exactly m.
CharacterList enumerate_unit_characters(std::int64_t p, std::int64_t level,
                                        bool only_primitive);

// Gauss sum tau(conj(chi)) = sum_{u in (Z/p^c)^x} conj(chi)(u) e^{2 pi i u / p^c}
// for chi primitive at level c >= 1.  |tau|^2 = p^c up to floating error.
std::complex<double> gauss_sum(const UnitCharacter& chi);

// Jacobi symbol (a/n) for odd n >= 1; 0 when gcd(a, n) > 1.
int jacobi_symbol(std::int64_t a, std::int64_t n);

// Unitary character of Q_p^x modulo its continuous unramified family:
// a unit character, the exact phase of the value at the uniformizer
// (value = e^{2 pi i phase}), and a flag for a symbolic extra |.|^s with
// s imaginary.  The symbolic part is tracked mod 2 so that a character
// and its inverse cancel; it never enters conductor arithmetic.
class PadicCharacter {
 public:
  explicit PadicCharacter(UnitCharacter unit, Rational phase = Rational(0),
                          bool generic = false);

  static PadicCharacter trivial(std::int64_t p);
  static PadicCharacter unramified(std::int64_t p, const Rational& phase,
                                   bool generic = false);
  // beta_Quad viewed as a character of Q_p^x trivial at the uniformizer.
  static PadicCharacter ramified_quadratic(std::int64_t p);

  const UnitCharacter& unit() const { return unit_; }
  const Rational& phase() const { return phase_; }
  bool generic() const { return generic_; }
  std::int64_t prime() const { return unit_.prime(); }

  std::int64_t conductor() const { return unit_.conductor(); }
  bool is_unramified() const { return unit_.is_trivial(); }
  bool is_trivial() const;
  bool is_quadratic() const;

  PadicCharacter inverse() const;
  PadicCharacter pow(std::int64_t n) const;
  friend PadicCharacter operator*(const PadicCharacter& a, const PadicCharacter& b);

  friend bool operator==(const PadicCharacter& a, const PadicCharacter& b);

 private:
  UnitCharacter unit_;
  Rational phase_;
  bool generic_;
};

// Total order used to canonicalize unordered character pairs:
// (conductor, reduced exponent, phase, generic) lexicographically.
int compare_characters(const PadicCharacter& a, const PadicCharacter& b);

}  // namespace qtwist
