#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qtwist/characters.hpp"
#include "qtwist/rational.hpp"

namespace qtwist::oracle {

// Explicit multiplicative table of (Z/p^m)^x: the canonical primitive root
// and the discrete log of every unit against it.  Tables are memoized per
// (p, m); construction is idempotent so duplicated first builds are safe.
struct GroupTable {
  std::int64_t p;
  std::int64_t level;
  std::int64_t modulus;  // p^level
  std::int64_t root;
  std::int64_t order;            // phi(p^level)
  std::vector<std::int64_t> dlog;  // indexed by residue; -1 for non-units
};

std::shared_ptr<const GroupTable> group_table(std::int64_t p, std::int64_t level);

// chi(u) as an exact phase in [0, 1): chi(u) = e^{2 pi i phase}.
Rational char_eval(const UnitCharacter& chi, std::int64_t u);

// Least f with chi trivial on every unit congruent to 1 mod p^f, found by
// exhaustive search over the group table.
std::int64_t conductor_by_search(const UnitCharacter& chi);

// Value table of a character pulled back to a common level: phases stored
// as exponents against the level's group order, so products are pointwise
// exponent sums with no closed-form character arithmetic involved.
struct CharExponentTable {
  std::int64_t p;
  std::int64_t level;
  std::int64_t modulus;
  std::int64_t order;
  std::vector<std::int64_t> expo;  // indexed by residue; -1 for non-units
};

CharExponentTable exponent_table(const UnitCharacter& chi, std::int64_t level);
CharExponentTable pointwise_product(const CharExponentTable& a, const CharExponentTable& b);
std::int64_t conductor_from_table(const CharExponentTable& table);

struct TwistDiscrepancy {
  std::string kind;  // "ps", "special", "bound"
  std::int64_t beta_level;
  std::int64_t beta_exponent;
  std::string phase;  // "num/den" phase of the special twist, "" for ps
  std::int64_t expected;
  std::int64_t actual;
};

struct TwistAuditReport {
  std::int64_t p;
  std::int64_t m_max;
  std::int64_t cases;
  std::vector<TwistDiscrepancy> discrepancies;
  // Exponents (at level m_max) of the beta whose twisted principal series
  // dropped to conductor zero; expected to be exactly the quadratic one.
  std::vector<std::int64_t> ps_zero_conductor_betas;
};

// For every character beta of level m_max: builds the trivial-central
// principal series beta |+| beta^{-1} and both unramified-phase Steinberg
// twists of beta, twists everything by the ramified quadratic character via
// pointwise value tables, and compares the searched conductors against the
// closed-form twist calculus and the Atkin-Li bound.
TwistAuditReport exhaustive_twist_audit(std::int64_t p, std::int64_t m_max);

}  // namespace qtwist::oracle
