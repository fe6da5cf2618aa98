#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qtwist/characters.hpp"
#include "qtwist/intmath.hpp"
#include "qtwist/oracle.hpp"

using namespace qtwist;

TEST_CASE("canonical primitive roots are deterministic and generate") {
  CHECK(canonical_primitive_root(3) == 2);
  CHECK(canonical_primitive_root(5) == 2);
  CHECK(canonical_primitive_root(7) == 3);
  CHECK(canonical_primitive_root(11) == 2);
  CHECK(canonical_primitive_root(13) == 2);
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19}) {
    const std::int64_t g = canonical_primitive_root(p);
    // Generates both mod p and mod p^2.
    std::int64_t seen = 0, u = 1;
    do {
      u = mulmod(u, g, p * p);
      ++seen;
    } while (u != 1);
    CHECK(seen == p * (p - 1));
  }
  CHECK_THROWS_AS(canonical_primitive_root(2), std::domain_error);
  CHECK_THROWS_AS(canonical_primitive_root(9), std::domain_error);
}

TEST_CASE("conductor exponent closed form") {
  CHECK(UnitCharacter(3, 2, 0).conductor() == 0);
  CHECK(UnitCharacter(3, 2, 3).conductor() == 1);
  CHECK(UnitCharacter(3, 2, 2).conductor() == 2);
  CHECK(UnitCharacter(7, 2, 21).conductor() == 1);

  SUBCASE("agrees with the exhaustive search, p <= 13, level <= 4") {
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
      for (std::int64_t m = 1; m <= 4; ++m) {
        for (const auto& chi : enumerate_unit_characters(p, m, false).characters) {
          REQUIRE(chi.conductor() == oracle::conductor_by_search(chi));
        }
      }
    }
  }
}

TEST_CASE("character arithmetic") {
  const UnitCharacter chi(3, 2, 2);
  CHECK((chi * chi.inverse()).is_trivial());

  const UnitCharacter quad3(3, 1, 1);
  CHECK((quad3 * quad3).is_trivial());

  const UnitCharacter sq = UnitCharacter(5, 1, 1).pow(2);
  CHECK(sq.exponent() == 2);
  CHECK(sq.conductor() == 1);
  CHECK(oracle::conductor_by_search(sq) == 1);

  SUBCASE("mixed levels promote to the maximum") {
    const UnitCharacter a(3, 1, 1);
    const UnitCharacter b(3, 2, 1);
    const UnitCharacter ab = a * b;
    CHECK(ab.level() == 2);
    CHECK(ab.exponent() == 4);  // 1*3 + 1
    CHECK(ab == b * a);
  }

  SUBCASE("presentation level is kept even when the conductor drops") {
    const UnitCharacter a(5, 2, 1);
    const UnitCharacter prod = a * a.inverse();
    CHECK(prod.level() == 2);
    CHECK(prod.conductor() == 0);
    CHECK(prod == UnitCharacter(5, 0, 0));
  }

  SUBCASE("mismatched primes are rejected") {
    CHECK_THROWS_AS(UnitCharacter(3, 1, 1) * UnitCharacter(5, 1, 1), std::domain_error);
  }

  SUBCASE("ultrametric conductor bound, exhaustive at small levels") {
    for (std::int64_t p : {3, 5}) {
      const auto chars = enumerate_unit_characters(p, 3, false).characters;
      for (const auto& a : chars) {
        for (const auto& b : chars) {
          const std::int64_t ca = a.conductor();
          const std::int64_t cb = b.conductor();
          const std::int64_t cab = (a * b).conductor();
          REQUIRE(cab <= std::max(ca, cb));
          if (ca != cb) REQUIRE(cab == std::max(ca, cb));
        }
      }
    }
  }
}

TEST_CASE("quadratic unit character") {
  const UnitCharacter q3 = quadratic_unit_character(3);
  CHECK(q3.level() == 1);
  CHECK(q3.exponent() == 1);
  CHECK(q3.order() == 2);
  CHECK(q3.conductor() == 1);

  // Values at 2 detect residues: nonresidue mod 5, residue mod 7.
  CHECK(oracle::char_eval(quadratic_unit_character(5), 2) == Rational(1, 2));
  CHECK(oracle::char_eval(quadratic_unit_character(7), 2) == Rational(0));

  CHECK_THROWS_AS(quadratic_unit_character(2), std::domain_error);

  SUBCASE("unique nontrivial square-trivial character at level 1") {
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
      int found = 0;
      for (const auto& chi : enumerate_unit_characters(p, 1, false).characters) {
        if (!chi.is_trivial() && (chi * chi).is_trivial()) {
          ++found;
          CHECK(chi == quadratic_unit_character(p));
        }
      }
      CHECK(found == 1);
    }
  }
}

TEST_CASE("character enumeration counts") {
  CHECK(enumerate_unit_characters(3, 2, true).count == 4);
  CHECK(enumerate_unit_characters(3, 1, false).count == 2);
  CHECK(enumerate_unit_characters(5, 1, true).count == 3);
  for (const auto& chi : enumerate_unit_characters(3, 2, true).characters) {
    CHECK(chi.conductor() == 2);
  }
  CHECK_THROWS_AS(enumerate_unit_characters(3, 0, false), std::domain_error);
}

TEST_CASE("gauss sums") {
  const auto tau3 = gauss_sum(quadratic_unit_character(3));
  CHECK(std::abs(tau3.real()) < 1e-12);
  CHECK(tau3.imag() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

  // Primitive of order 3 mod 9: exponent 2 against N = 6.
  CHECK(std::norm(gauss_sum(UnitCharacter(3, 2, 2))) == doctest::Approx(9.0).epsilon(1e-9));
  CHECK(std::norm(gauss_sum(quadratic_unit_character(7))) == doctest::Approx(7.0).epsilon(1e-9));

  CHECK_THROWS_AS(gauss_sum(UnitCharacter(3, 2, 3)), std::domain_error);  // imprimitive
  CHECK_THROWS_AS(gauss_sum(UnitCharacter(3, 0, 0)), std::domain_error);

  SUBCASE("modulus squared equals the conductor, small sweep") {
    for (std::int64_t p : {3, 5, 7}) {
      for (std::int64_t m = 1; checked_pow(p, static_cast<int>(m)) <= 343; ++m) {
        const double modulus = static_cast<double>(checked_pow(p, static_cast<int>(m)));
        for (const auto& chi : enumerate_unit_characters(p, m, true).characters) {
          REQUIRE(std::abs(std::norm(gauss_sum(chi)) - modulus) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("jacobi symbol") {
  CHECK(jacobi_symbol(2, 3) == -1);
  CHECK(jacobi_symbol(3, 7) == -1);
  CHECK(jacobi_symbol(0, 1) == 1);
  CHECK(jacobi_symbol(-5, 1) == 1);
  CHECK(jacobi_symbol(123456, 1) == 1);
  CHECK(jacobi_symbol(6, 9) == 0);
  CHECK_THROWS_AS(jacobi_symbol(1, 4), std::domain_error);
  CHECK_THROWS_AS(jacobi_symbol(1, 0), std::domain_error);

  SUBCASE("complete multiplicativity in both arguments") {
    for (std::int64_t n = 1; n <= 35; n += 2) {
      for (std::int64_t m = 1; m <= 35; m += 2) {
        for (std::int64_t a = -6; a <= 6; ++a) {
          REQUIRE(jacobi_symbol(a, n * m) == jacobi_symbol(a, n) * jacobi_symbol(a, m));
          for (std::int64_t b = -6; b <= 6; ++b) {
            REQUIRE(jacobi_symbol(a * b, n) == jacobi_symbol(a, n) * jacobi_symbol(b, n));
          }
        }
      }
    }
  }

  SUBCASE("matches the Legendre symbol via Euler's criterion") {
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
      for (std::int64_t a = 1; a < p; ++a) {
        const std::int64_t euler = powmod(a, (p - 1) / 2, p);
        const int expected = euler == 1 ? 1 : -1;
        REQUIRE(jacobi_symbol(a, p) == expected);
      }
    }
  }
}

TEST_CASE("p-adic characters") {
  const PadicCharacter triv = PadicCharacter::trivial(5);
  CHECK(triv.is_trivial());
  CHECK(triv.is_quadratic());  // order divides 2 with phase 0
  CHECK(triv.is_unramified());

  const PadicCharacter quad = PadicCharacter::ramified_quadratic(5);
  CHECK(quad.is_quadratic());
  CHECK(!quad.is_unramified());
  CHECK(quad.conductor() == 1);
  CHECK((quad * quad).is_trivial());

  const PadicCharacter half = PadicCharacter::unramified(5, Rational(1, 2));
  CHECK(half.is_quadratic());
  CHECK(half.conductor() == 0);
  CHECK((quad * half).is_quadratic());

  const PadicCharacter third = PadicCharacter::unramified(5, Rational(1, 3));
  CHECK(!third.is_quadratic());
  CHECK((third * third.inverse()).is_trivial());
  CHECK(third.pow(3).is_trivial());
  CHECK(rational_mod_one(third.pow(2).phase()) == Rational(2, 3));

  SUBCASE("symbolic unramified parts cancel against inverses") {
    const PadicCharacter generic(UnitCharacter(5, 1, 1), Rational(0), true);
    CHECK(!generic.is_quadratic());
    CHECK((generic * generic.inverse()).is_trivial());
    CHECK(generic.pow(2).generic() == false);
    CHECK(generic.pow(3).generic() == true);
  }
}
