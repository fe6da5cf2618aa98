#include "qtwist/local_rep.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtwist {

LocalRep LocalRep::principal_series(const PadicCharacter& chi1, const PadicCharacter& chi2) {
  if (chi1.prime() != chi2.prime())
    throw std::domain_error("principal_series: mismatched residue primes");
  // Unitary characters can never differ by |.|^{+-1} (that character is not
  // unitary), so every constructible pair induces irreducibly.
  if (compare_characters(chi1, chi2) <= 0) return LocalRep(PrincipalSeries{chi1, chi2});
  return LocalRep(PrincipalSeries{chi2, chi1});
}

LocalRep LocalRep::special(const PadicCharacter& omega) {
  return LocalRep(Special{omega});
}

LocalRep LocalRep::supercuspidal(const PadicCharacter& central, std::int64_t conductor,
                                 ScType sc_type, std::int64_t dim_rho, std::string tag) {
  if (conductor < 2)
    throw std::domain_error("supercuspidal: conductor exponent must be at least 2");
  if (dim_rho < 1) throw std::domain_error("supercuspidal: dim_rho must be positive");
  return LocalRep(Supercuspidal{central, conductor, sc_type, dim_rho, std::move(tag),
                                true, PadicCharacter::trivial(central.prime())});
}

std::int64_t LocalRep::prime() const {
  return std::visit(
      [](const auto& r) -> std::int64_t {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, PrincipalSeries>) return r.chi1.prime();
        if constexpr (std::is_same_v<T, Special>) return r.omega.prime();
        if constexpr (std::is_same_v<T, Supercuspidal>) return r.central.prime();
      },
      data_);
}

bool operator==(const LocalRep& a, const LocalRep& b) {
  if (a.data_.index() != b.data_.index()) return false;
  if (a.is_principal_series()) {
    const auto& x = std::get<PrincipalSeries>(a.data_);
    const auto& y = std::get<PrincipalSeries>(b.data_);
    return x.chi1 == y.chi1 && x.chi2 == y.chi2;
  }
  if (a.is_special()) {
    return std::get<Special>(a.data_).omega == std::get<Special>(b.data_).omega;
  }
  const auto& x = std::get<Supercuspidal>(a.data_);
  const auto& y = std::get<Supercuspidal>(b.data_);
  return x.tag == y.tag && x.sc_type == y.sc_type && x.dim_rho == y.dim_rho &&
         x.conductor == y.conductor && x.conductor_exact == y.conductor_exact &&
         x.central == y.central && x.twist == y.twist;
}

std::int64_t conductor_exponent(const LocalRep& rep) {
  return std::visit(
      [](const auto& r) -> std::int64_t {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, PrincipalSeries>)
          return r.chi1.conductor() + r.chi2.conductor();
        if constexpr (std::is_same_v<T, Special>)
          return r.omega.conductor() == 0 ? 1 : 2 * r.omega.conductor();
        if constexpr (std::is_same_v<T, Supercuspidal>) return r.conductor;
      },
      rep.data());
}

bool conductor_is_exact(const LocalRep& rep) {
  if (const auto* sc = std::get_if<Supercuspidal>(&rep.data())) return sc->conductor_exact;
  return true;
}

PadicCharacter central_character(const LocalRep& rep) {
  return std::visit(
      [](const auto& r) -> PadicCharacter {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, PrincipalSeries>) return r.chi1 * r.chi2;
        if constexpr (std::is_same_v<T, Special>) return r.omega.pow(2);
        if constexpr (std::is_same_v<T, Supercuspidal>) return r.central;
      },
      rep.data());
}

std::int64_t atkin_li_bound(std::int64_t c_pi, std::int64_t c_omega, std::int64_t c_central) {
  if (c_pi < 0 || c_omega < 0 || c_central < 0)
    throw std::domain_error("atkin_li_bound: conductor exponents are nonnegative");
  return std::max({c_pi, c_omega + c_central, 2 * c_omega});
}

LocalRep twist(const LocalRep& rep, const PadicCharacter& omega) {
  if (rep.prime() != omega.prime())
    throw std::domain_error("twist: mismatched residue primes");
  return std::visit(
      [&](const auto& r) -> LocalRep {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, PrincipalSeries>) {
          return LocalRep::principal_series(r.chi1 * omega, r.chi2 * omega);
        } else if constexpr (std::is_same_v<T, Special>) {
          return LocalRep::special(r.omega * omega);
        } else {
          Supercuspidal out = r;
          out.central = r.central * omega.pow(2);
          out.twist = r.twist * omega;
          if (omega.is_unramified()) {
            // Unramified twists never move the conductor.
          } else if (r.central.is_trivial() && omega.is_quadratic()) {
            // Ramified quadratic twist of a trivial-central-character
            // supercuspidal: conductor exponent is unchanged.
          } else {
            out.conductor = atkin_li_bound(r.conductor, omega.conductor(),
                                           r.central.conductor());
            out.conductor_exact = false;
          }
          return LocalRep(LocalRep::Data{std::move(out)});
        }
      },
      rep.data());
}

std::vector<LocalRep> classify_conductor_one(std::int64_t p) {
  return {LocalRep::special(PadicCharacter::trivial(p)),
          LocalRep::special(PadicCharacter::unramified(p, Rational(1, 2)))};
}

bool is_level_invariant(const LocalRep& rep) {
  if (!central_character(rep).is_trivial())
    throw std::domain_error("is_level_invariant: central character must be trivial");
  const LocalRep twisted = twist(rep, PadicCharacter::ramified_quadratic(rep.prime()));
  return conductor_exponent(twisted) == conductor_exponent(rep);
}

}  // namespace qtwist
