#include "qtwist/similarity.hpp"

#include <stdexcept>

#include "qtwist/intmath.hpp"

namespace qtwist {

namespace {

bool phases_differ_by_half_step(const Rational& a, const Rational& b) {
  const Rational d = rational_mod_one(a - b);
  return d == 0 || d == Rational(1, 2);
}

// Phase representative in [0, 1/2) modulo the order-2 unramified twist.
Rational phase_mod_half(const Rational& phase) {
  Rational r = rational_mod_one(phase);
  if (r >= Rational(1, 2)) r -= Rational(1, 2);
  return r;
}

Rational power_rational(std::int64_t base, std::int64_t exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return Rational(out);
}

}  // namespace

bool same_class(const LocalRep& a, const LocalRep& b) {
  if (a.prime() != b.prime())
    throw std::domain_error("same_class: mismatched residue primes");
  if (a.data().index() != b.data().index()) return false;

  if (a.is_principal_series()) {
    const auto& x = std::get<PrincipalSeries>(a.data());
    const auto& y = std::get<PrincipalSeries>(b.data());
    const bool straight = x.chi1.unit() == y.chi1.unit() && x.chi2.unit() == y.chi2.unit();
    const bool swapped = x.chi1.unit() == y.chi2.unit() && x.chi2.unit() == y.chi1.unit();
    if (!straight && !swapped) return false;
    if ((x.chi1.generic() != x.chi2.generic()) != (y.chi1.generic() != y.chi2.generic()))
      return false;
    return rational_mod_one(x.chi1.phase() + x.chi2.phase()) ==
           rational_mod_one(y.chi1.phase() + y.chi2.phase());
  }

  if (a.is_special()) {
    const auto& x = std::get<Special>(a.data());
    const auto& y = std::get<Special>(b.data());
    return x.omega.unit() == y.omega.unit() &&
           x.omega.generic() == y.omega.generic() &&
           phases_differ_by_half_step(x.omega.phase(), y.omega.phase());
  }

  const auto& x = std::get<Supercuspidal>(a.data());
  const auto& y = std::get<Supercuspidal>(b.data());
  return x.tag == y.tag && x.sc_type == y.sc_type && x.dim_rho == y.dim_rho &&
         x.conductor == y.conductor && x.twist.unit() == y.twist.unit() &&
         x.twist.generic() == y.twist.generic() &&
         phases_differ_by_half_step(x.twist.phase(), y.twist.phase());
}

Rational local_constant(const LocalRep& rep) {
  const std::int64_t q = rep.prime();
  if (rep.is_special()) return Rational(q - 1);
  if (rep.is_supercuspidal()) {
    const auto& sc = std::get<Supercuspidal>(rep.data());
    if (sc.sc_type == ScType::type_one) return Rational(sc.dim_rho);
    return Rational(q + 1, 2) * Rational(sc.dim_rho);
  }
  const auto& ps = std::get<PrincipalSeries>(rep.data());
  const std::int64_t c = (ps.chi1.unit() * ps.chi2.unit().inverse()).conductor();
  if (c == 0) return Rational(1);
  const Rational numerator = Rational(2) * (power_rational(q, c) + power_rational(q, c - 1));
  const Rational denominator = power_rational(q, c / 2) + Rational(1);
  Rational out = numerator / denominator;
  out.canonicalize();
  return out;
}

SimilarityClass make_similarity_class(const LocalRep& rep) {
  LocalRep canonical = rep;
  if (rep.is_principal_series()) {
    const auto& ps = std::get<PrincipalSeries>(rep.data());
    // The factory orders the pair; choosing between the two unramified
    // order-2 twists picks the lexicographically smaller first character.
    const PadicCharacter half = PadicCharacter::unramified(rep.prime(), Rational(1, 2));
    const LocalRep twisted = LocalRep::principal_series(ps.chi1 * half, ps.chi2 * half);
    const auto& alt = std::get<PrincipalSeries>(twisted.data());
    const int cmp1 = compare_characters(alt.chi1, ps.chi1);
    const int cmp2 = compare_characters(alt.chi2, ps.chi2);
    if (cmp1 < 0 || (cmp1 == 0 && cmp2 < 0)) canonical = twisted;
    else canonical = LocalRep::principal_series(ps.chi1, ps.chi2);
  } else if (rep.is_special()) {
    const auto& sp = std::get<Special>(rep.data());
    canonical = LocalRep::special(PadicCharacter(
        sp.omega.unit(), phase_mod_half(sp.omega.phase()), sp.omega.generic()));
  } else {
    const auto& sc = std::get<Supercuspidal>(rep.data());
    const PadicCharacter reduced_twist(sc.twist.unit(), phase_mod_half(sc.twist.phase()),
                                       sc.twist.generic());
    if (!(reduced_twist == sc.twist)) {
      canonical = twist(rep, PadicCharacter::unramified(rep.prime(), Rational(1, 2)));
    }
  }
  return SimilarityClass{canonical, local_constant(canonical)};
}

ClassInventory enumerate_classes(std::int64_t p, std::int64_t conductor) {
  if (p < 3 || !is_prime(p))
    throw std::domain_error("enumerate_classes: p must be an odd prime");
  if (conductor < 0 || conductor > 2)
    throw std::domain_error(
        "enumerate_classes: census known only for conductor exponent <= 2");

  ClassInventory out{p, conductor, {}, Rational(0)};
  const PadicCharacter one = PadicCharacter::trivial(p);
  const PadicCharacter quad = PadicCharacter::ramified_quadratic(p);

  if (conductor == 0) {
    out.classes.push_back(make_similarity_class(LocalRep::principal_series(one, one)));
  } else if (conductor == 1) {
    out.classes.push_back(make_similarity_class(LocalRep::special(one)));
  } else {
    out.classes.push_back(make_similarity_class(LocalRep::special(quad)));
    out.classes.push_back(make_similarity_class(LocalRep::principal_series(quad, quad)));
    // Ramified pairs {beta, beta^{-1}} with beta of conductor 1, beta^2 != 1:
    // one class per pair, (p-3)/2 in all.
    for (std::int64_t k = 1; 2 * k < p - 1; ++k) {
      const UnitCharacter beta(p, 1, k);
      out.classes.push_back(make_similarity_class(LocalRep::principal_series(
          PadicCharacter(beta), PadicCharacter(beta.inverse()))));
    }
    // Conductor-p^2 supercuspidals with trivial central character: type I,
    // dim rho = p - 1, and (p-1)/2 isomorphism classes.
    for (std::int64_t i = 1; i <= (p - 1) / 2; ++i) {
      out.classes.push_back(make_similarity_class(LocalRep::supercuspidal(
          one, 2, ScType::type_one, p - 1, "sc-c2-" + std::to_string(i))));
    }
  }

  for (const auto& cls : out.classes) out.sum_constants += cls.constant;
  out.sum_constants.canonicalize();
  return out;
}

ClassSums class_sums(std::int64_t p) {
  const ClassInventory inventory = enumerate_classes(p, 2);
  Rational total(0);
  Rational invariant(0);
  for (const auto& cls : inventory.classes) {
    total += cls.constant;
    if (is_level_invariant(cls.representative)) invariant += cls.constant;
  }
  const ClassSums sums{rational_to_int64(total), rational_to_int64(invariant)};
  if (sums.total != p * p - p - 1 || sums.invariant_total != p * p - 2 * p - 1)
    throw std::logic_error("class_sums: enumeration disagrees with the closed forms");
  return sums;
}

Rational newform_weyl_constant(std::int64_t q) {
  if (q < 1) throw std::domain_error("newform_weyl_constant: level must be positive");
  if (q % 2 == 0) throw std::domain_error("newform_weyl_constant: level must be odd");
  Rational out(1, 12);
  for (const auto& pe : factorize(q)) {
    if (pe.e > 2)
      throw std::domain_error("newform_weyl_constant: level must be cube-free");
    out *= enumerate_classes(pe.p, pe.e).sum_constants;
  }
  out.canonicalize();
  return out;
}

}  // namespace qtwist
