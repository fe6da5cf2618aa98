#include "qtwist/monomial.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qtwist/intmath.hpp"

namespace qtwist {

namespace {

double log_bigint(const BigInt& z) {
  signed long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp2) * std::numbers::ln2;
}

// log(a + b sqrt(D)) for positive a, b, robust to huge operands.
double log_a_plus_b_sqrt(const BigInt& a, const BigInt& b, std::int64_t D) {
  const double la = log_bigint(a);
  const double lb = log_bigint(b) + 0.5 * std::log(static_cast<double>(D));
  const double hi = std::max(la, lb);
  const double lo = std::min(la, lb);
  return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace

RealQuadraticField fundamental_unit(std::int64_t D) {
  if (D <= 1) throw std::domain_error("fundamental_unit: D must exceed 1");
  if (!is_squarefree(D)) throw std::domain_error("fundamental_unit: D must be squarefree");

  // Expand omega = (P0 + sqrt(D))/Q0 where Z[omega] is the maximal order.
  const bool half_integral = (D % 4 == 1);
  std::int64_t P = half_integral ? 1 : 0;
  std::int64_t Q = half_integral ? 2 : 1;
  const std::int64_t sq = isqrt64(D);

  // Convergents p_i/q_i of [a0; a1, a2, ...]; the unit is read off from the
  // convergent one step before the first period of the tail closes.
  BigInt p_prev = 1, q_prev = 0;  // index i-2
  BigInt p_cur, q_cur;            // index i-1
  {
    const std::int64_t a0 = (P + sq) / Q;
    p_cur = a0;
    q_cur = 1;
    P = a0 * Q - P;
    Q = (D - P * P) / Q;
  }
  const std::int64_t first_P = P, first_Q = Q;

  std::int64_t period = 0;
  for (std::int64_t i = 1;; ++i) {
    if (i > 1 && P == first_P && Q == first_Q) {
      period = i - 1;
      break;
    }
    const std::int64_t a = (P + sq) / Q;
    const BigInt p_next = a * p_cur + p_prev;
    const BigInt q_next = a * q_cur + q_prev;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }

  // eps0 = p - q * conj(omega) with (p, q) the convergent at index period-1,
  // which sits in (p_prev, q_prev) when the repeat is detected.
  RealQuadraticField out;
  out.D = D;
  out.disc = half_integral ? D : 4 * D;
  if (half_integral) {
    out.a = 2 * p_prev - q_prev;
    out.b = q_prev;
  } else {
    out.a = 2 * p_prev;
    out.b = 2 * q_prev;
  }
  out.unit_norm = (period % 2 == 0) ? 1 : -1;

  const BigInt pell = out.a * out.a - D * out.b * out.b;
  if (pell != 4 * out.unit_norm)
    throw std::logic_error("fundamental_unit: continued fraction lost the Pell identity");

  out.regulator = log_a_plus_b_sqrt(out.a, out.b, D) - std::numbers::ln2;
  return out;
}

MonomialLatticeReport monomial_spacing(std::int64_t D) {
  const RealQuadraticField field = fundamental_unit(D);
  MonomialLatticeReport out;
  out.D = D;
  out.phi_epsilon0 = 2.0 * field.regulator;
  out.spacing = 2.0 * std::numbers::pi / out.phi_epsilon0;
  return out;
}

std::int64_t monomial_count_bound(std::int64_t D, double T, std::int64_t cosets) {
  if (!(T > 0)) throw std::domain_error("monomial_count_bound: T must be positive");
  if (cosets < 1) throw std::domain_error("monomial_count_bound: cosets must be positive");
  const MonomialLatticeReport report = monomial_spacing(D);
  const double per_coset = std::floor(2.0 * T / report.spacing) + 1.0;
  return cosets * static_cast<std::int64_t>(per_coset);
}

}  // namespace qtwist
