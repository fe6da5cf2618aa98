#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qtwist/intmath.hpp"
#include "qtwist/monomial.hpp"

using namespace qtwist;

TEST_CASE("fundamental units of small fields") {
  const auto d5 = fundamental_unit(5);
  CHECK(d5.a == 1);
  CHECK(d5.b == 1);
  CHECK(d5.unit_norm == -1);
  CHECK(d5.disc == 5);

  const auto d2 = fundamental_unit(2);
  CHECK(d2.a == 2);
  CHECK(d2.b == 2);  // 1 + sqrt(2)
  CHECK(d2.unit_norm == -1);
  CHECK(d2.disc == 8);

  const auto d3 = fundamental_unit(3);
  CHECK(d3.a == 4);
  CHECK(d3.b == 2);  // 2 + sqrt(3)
  CHECK(d3.unit_norm == 1);

  const auto d13 = fundamental_unit(13);
  CHECK(d13.a == 3);
  CHECK(d13.b == 1);  // (3 + sqrt(13))/2
  CHECK(d13.unit_norm == -1);

  const auto d61 = fundamental_unit(61);
  CHECK(d61.a == 39);
  CHECK(d61.b == 5);
  CHECK(d61.unit_norm == -1);

  const auto d94 = fundamental_unit(94);
  CHECK(d94.a == BigInt("4286590"));
  CHECK(d94.b == BigInt("442128"));  // 2143295 + 221064 sqrt(94)
  CHECK(d94.unit_norm == 1);

  CHECK_THROWS_AS(fundamental_unit(1), std::domain_error);
  CHECK_THROWS_AS(fundamental_unit(4), std::domain_error);
  CHECK_THROWS_AS(fundamental_unit(12), std::domain_error);
}

TEST_CASE("pell identity holds exactly across the sweep") {
  for (std::int64_t D = 2; D <= 10000; ++D) {
    if (!is_squarefree(D)) continue;
    const auto field = fundamental_unit(D);
    const BigInt pell = field.a * field.a - D * field.b * field.b;
    REQUIRE((pell == 4 || pell == -4));
    REQUIRE(pell == 4 * field.unit_norm);
    REQUIRE(field.regulator > 0);
  }
}

TEST_CASE("minimality against brute-force search") {
  // The first b admitting a unit (a + b sqrt(D))/2 is the fundamental one;
  // search capped so the handful of giant-unit fields only get a partial scan.
  constexpr std::int64_t cap = 100000;
  for (std::int64_t D = 2; D <= 200; ++D) {
    if (!is_squarefree(D)) continue;
    const auto field = fundamental_unit(D);
    for (BigInt b = 1; b < field.b && b <= cap; ++b) {
      const BigInt target = D * b * b;
      for (const BigInt& shifted : {BigInt(target + 4), BigInt(target - 4)}) {
        if (shifted < 0) continue;
        const BigInt root = sqrt(shifted);
        const bool is_square = (root * root == shifted);
        const bool integral = (D % 4 == 1) || (root % 2 == 0 && b % 2 == 0);
        const bool smaller_unit = is_square && integral;
        REQUIRE(!smaller_unit);
      }
    }
  }
}

TEST_CASE("regulators are accurate") {
  CHECK(fundamental_unit(5).regulator ==
        doctest::Approx(std::log((1.0 + std::sqrt(5.0)) / 2.0)).epsilon(1e-12));
  CHECK(fundamental_unit(3).regulator ==
        doctest::Approx(std::log(2.0 + std::sqrt(3.0))).epsilon(1e-12));
  // Huge-unit field: compare against the log of the convergent pair.
  const auto d94 = fundamental_unit(94);
  CHECK(d94.regulator ==
        doctest::Approx(std::log(2143295.0 + 221064.0 * std::sqrt(94.0))).epsilon(1e-10));
}

TEST_CASE("monomial spacing") {
  const auto d5 = monomial_spacing(5);
  CHECK(d5.phi_epsilon0 == doctest::Approx(2 * 0.4812118250596035).epsilon(1e-10));
  CHECK(d5.spacing == doctest::Approx(std::numbers::pi / 0.4812118250596035).epsilon(1e-10));
  CHECK(d5.spacing == doctest::Approx(6.5285).epsilon(1e-4));

  const auto d3 = monomial_spacing(3);
  CHECK(d3.spacing == doctest::Approx(std::numbers::pi / 1.3169578969248166).epsilon(1e-10));
  CHECK(d3.spacing == doctest::Approx(2.3855).epsilon(1e-4));

  SUBCASE("lattice generator is positive and inverse to the regulator") {
    for (std::int64_t D : {2, 3, 5, 6, 7, 10, 11, 13, 94}) {
      const auto report = monomial_spacing(D);
      REQUIRE(report.phi_epsilon0 > 0);
      REQUIRE(report.spacing * fundamental_unit(D).regulator ==
              doctest::Approx(std::numbers::pi).epsilon(1e-12));
    }
  }
}

TEST_CASE("monomial count bound") {
  CHECK(monomial_count_bound(5, 6.5289, 1) == 3);
  CHECK(monomial_count_bound(5, 1e-9, 1) == 1);
  CHECK(monomial_count_bound(5, 1e-9, 7) == 7);
  CHECK_THROWS_AS(monomial_count_bound(5, 0.0, 1), std::domain_error);
  CHECK_THROWS_AS(monomial_count_bound(5, -1.0, 1), std::domain_error);
  CHECK_THROWS_AS(monomial_count_bound(5, 1.0, 0), std::domain_error);

  SUBCASE("doubling T doubles the count asymptotically") {
    for (std::int64_t D : {2, 3, 5, 13}) {
      for (double T : {1e3, 1e4}) {
        const double ratio =
            static_cast<double>(monomial_count_bound(D, 2 * T, 1)) /
            static_cast<double>(monomial_count_bound(D, T, 1));
        REQUIRE(ratio == doctest::Approx(2.0).epsilon(0.01));
      }
    }
  }

  SUBCASE("linear growth is density zero against the quadratic count") {
    for (std::int64_t D : {2, 3, 5, 13}) {
      double previous = 1.0;
      for (double T : {1e2, 1e3, 1e4}) {
        const double normalized =
            static_cast<double>(monomial_count_bound(D, T, 1)) / (T * T);
        REQUIRE(normalized < previous);
        previous = normalized;
      }
      REQUIRE(static_cast<double>(monomial_count_bound(D, 1e4, 1)) / 1e8 < 1e-3);
    }
  }
}
