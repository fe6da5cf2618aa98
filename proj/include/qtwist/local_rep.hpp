#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qtwist/characters.hpp"

namespace qtwist {

enum class ScType { type_one, type_two };

// Irreducible principal series chi1 |+| chi2.  The pair is stored in the
// canonical order of compare_characters, so structural equality is
// isomorphism (the swapped pair gives the same representation).
struct PrincipalSeries {
  PadicCharacter chi1;
  PadicCharacter chi2;
};

// Twist omega * St of the Steinberg representation.
struct Special {
  PadicCharacter omega;
};

// Supercuspidals are opaque: identified by a tag plus type, dim of the
// inducing representation, conductor exponent and central character.
// `twist` accumulates the characters applied since construction, and
// `conductor_exact` records whether the stored conductor exponent is the
// true value or only an upper bound.
struct Supercuspidal {
  PadicCharacter central;
  std::int64_t conductor;
  ScType sc_type;
  std::int64_t dim_rho;
  std::string tag;
  bool conductor_exact;
  PadicCharacter twist;
};

class LocalRep {
 public:
  using Data = std::variant<PrincipalSeries, Special, Supercuspidal>;

  static LocalRep principal_series(const PadicCharacter& chi1, const PadicCharacter& chi2);
  static LocalRep special(const PadicCharacter& omega);
  static LocalRep supercuspidal(const PadicCharacter& central, std::int64_t conductor,
                                ScType sc_type, std::int64_t dim_rho, std::string tag);

  const Data& data() const { return data_; }
  std::int64_t prime() const;

  bool is_principal_series() const { return std::holds_alternative<PrincipalSeries>(data_); }
  bool is_special() const { return std::holds_alternative<Special>(data_); }
  bool is_supercuspidal() const { return std::holds_alternative<Supercuspidal>(data_); }

  friend bool operator==(const LocalRep& a, const LocalRep& b);
  friend LocalRep twist(const LocalRep& rep, const PadicCharacter& omega);

 private:
  explicit LocalRep(Data data) : data_(std::move(data)) {}
  Data data_;
};

std::int64_t conductor_exponent(const LocalRep& rep);

// False only for a supercuspidal whose conductor exponent is an Atkin-Li
// upper bound rather than a proved value.
bool conductor_is_exact(const LocalRep& rep);

PadicCharacter central_character(const LocalRep& rep);

// max{c(pi), c(omega) + c(omega_pi), 2 c(omega)}.
std::int64_t atkin_li_bound(std::int64_t c_pi, std::int64_t c_omega, std::int64_t c_central);

// pi (x) omega.  Exact for principal series and special representations.
// For supercuspidals the conductor is exact when omega is unramified or
// when omega is quadratic and the central character is trivial (both leave
// it unchanged); otherwise the stored value is the Atkin-Li bound.
LocalRep twist(const LocalRep& rep, const PadicCharacter& omega);

// The complete list of representations of conductor exponent 1 with trivial
// central character: the two unramified-quadratic twists of Steinberg.
std::vector<LocalRep> classify_conductor_one(std::int64_t p);

// Whether twisting by the ramified quadratic character preserves the
// conductor exponent.  Requires trivial central character.
bool is_level_invariant(const LocalRep& rep);

}  // namespace qtwist
