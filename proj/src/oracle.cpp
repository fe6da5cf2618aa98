#include "qtwist/oracle.hpp"

#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

#include "qtwist/intmath.hpp"
#include "qtwist/local_rep.hpp"

namespace qtwist::oracle {

namespace {

constexpr std::int64_t kMaxTableModulus = 50'000'000;

std::shared_ptr<const GroupTable> build_table(std::int64_t p, std::int64_t level) {
  if (level < 1) throw std::domain_error("group_table: level must be >= 1");
  const std::int64_t modulus = checked_pow(p, static_cast<int>(level));
  if (modulus > kMaxTableModulus)
    throw std::domain_error("group_table: modulus too large for exhaustive tables");

  auto table = std::make_shared<GroupTable>();
  table->p = p;
  table->level = level;
  table->modulus = modulus;
  table->root = canonical_primitive_root(p);
  table->order = modulus / p * (p - 1);
  table->dlog.assign(static_cast<std::size_t>(modulus), -1);
  std::int64_t u = 1;
  for (std::int64_t j = 0; j < table->order; ++j) {
    table->dlog[static_cast<std::size_t>(u)] = j;
    u = mulmod(u, table->root, modulus);
  }
  if (u != 1) throw std::logic_error("group_table: root failed to generate the units");
  return table;
}

std::shared_ptr<const GroupTable> cached_table(std::int64_t p, std::int64_t level) {
  static std::mutex mutex;
  static std::map<std::pair<std::int64_t, std::int64_t>, std::shared_ptr<const GroupTable>> cache;
  const auto key = std::make_pair(p, level);
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto table = build_table(p, level);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(table)).first->second;
}

}  // namespace

std::shared_ptr<const GroupTable> group_table(std::int64_t p, std::int64_t level) {
  if (p < 3 || !is_prime(p)) throw std::domain_error("group_table: p must be an odd prime");
  return cached_table(p, level);
}

Rational char_eval(const UnitCharacter& chi, std::int64_t u) {
  const std::int64_t p = chi.prime();
  std::int64_t r = u % p;
  if (r < 0) r += p;
  if (r == 0) throw std::domain_error("char_eval: argument is not a unit");
  if (chi.level() == 0) return Rational(0);

  const auto table = group_table(p, chi.level());
  std::int64_t residue = u % table->modulus;
  if (residue < 0) residue += table->modulus;
  const std::int64_t log = table->dlog[static_cast<std::size_t>(residue)];
  const std::int64_t n = table->order;
  const std::int64_t e = static_cast<std::int64_t>(
      static_cast<__int128>(chi.exponent()) * log % n);
  Rational out(e, n);
  out.canonicalize();
  return out;
}

std::int64_t conductor_by_search(const UnitCharacter& chi) {
  if (chi.level() == 0) return 0;
  return conductor_from_table(exponent_table(chi, chi.level()));
}

CharExponentTable exponent_table(const UnitCharacter& chi, std::int64_t level) {
  if (level < chi.level() || level < 1)
    throw std::domain_error("exponent_table: level must be >= the character level and >= 1");
  const std::int64_t p = chi.prime();
  const auto table = group_table(p, level);

  CharExponentTable out;
  out.p = p;
  out.level = level;
  out.modulus = table->modulus;
  out.order = table->order;
  out.expo.assign(static_cast<std::size_t>(out.modulus), -1);

  if (chi.level() == 0) {
    for (std::int64_t u = 0; u < out.modulus; ++u) {
      if (table->dlog[static_cast<std::size_t>(u)] >= 0) out.expo[static_cast<std::size_t>(u)] = 0;
    }
    return out;
  }

  // chi pulled back to the larger level multiplies its exponent by the
  // index, so the pulled-back exponent of g^j is (k * index * j) mod order.
  const std::int64_t index = checked_pow(p, static_cast<int>(level - chi.level()));
  const std::int64_t k = mulmod(chi.exponent(), index % out.order, out.order);
  std::int64_t u = 1;
  std::int64_t e = 0;
  for (std::int64_t j = 0; j < out.order; ++j) {
    out.expo[static_cast<std::size_t>(u)] = e;
    u = mulmod(u, table->root, out.modulus);
    e += k;
    if (e >= out.order) e -= out.order;
  }
  return out;
}

CharExponentTable pointwise_product(const CharExponentTable& a, const CharExponentTable& b) {
  if (a.p != b.p || a.level != b.level)
    throw std::domain_error("pointwise_product: tables must share (p, level)");
  CharExponentTable out = a;
  for (std::size_t u = 0; u < out.expo.size(); ++u) {
    if (out.expo[u] < 0) continue;
    out.expo[u] = (out.expo[u] + b.expo[u]) % out.order;
  }
  return out;
}

std::int64_t conductor_from_table(const CharExponentTable& table) {
  const std::int64_t p = table.p;
  // Triviality on 1 + p^f Z is monotone in f; scan subgroups from the
  // smallest upward and return one past the last nontrivial one.
  for (std::int64_t f = table.level - 1; f >= 1; --f) {
    const std::int64_t step = checked_pow(p, static_cast<int>(f));
    for (std::int64_t u = 1; u < table.modulus; u += step) {
      if (table.expo[static_cast<std::size_t>(u)] != 0) return f + 1;
    }
  }
  for (std::int64_t u = 1; u < table.modulus; ++u) {
    const std::int64_t e = table.expo[static_cast<std::size_t>(u)];
    if (e > 0) return 1;
  }
  return 0;
}

TwistAuditReport exhaustive_twist_audit(std::int64_t p, std::int64_t m_max) {
  if (p < 3 || !is_prime(p))
    throw std::domain_error("exhaustive_twist_audit: p must be an odd prime");
  if (m_max < 1 || m_max > 4)
    throw std::domain_error("exhaustive_twist_audit: m_max must be in [1, 4]");

  TwistAuditReport report{p, m_max, 0, {}, {}};
  const UnitCharacter quad = quadratic_unit_character(p);
  const PadicCharacter quad_padic = PadicCharacter::ramified_quadratic(p);
  const CharExponentTable quad_table = exponent_table(quad, m_max);
  const std::array<Rational, 2> phases = {Rational(0), Rational(1, 2)};

  for (const auto& beta : enumerate_unit_characters(p, m_max, false).characters) {
    // Principal series beta |+| beta^{-1}, trivial central character.
    {
      const LocalRep ps = LocalRep::principal_series(PadicCharacter(beta),
                                                     PadicCharacter(beta.inverse()));
      const LocalRep twisted = twist(ps, quad_padic);
      const std::int64_t actual = conductor_exponent(twisted);
      const std::int64_t expected =
          conductor_from_table(pointwise_product(exponent_table(beta, m_max), quad_table)) +
          conductor_from_table(
              pointwise_product(exponent_table(beta.inverse(), m_max), quad_table));
      ++report.cases;
      if (actual != expected)
        report.discrepancies.push_back(
            {"ps", m_max, beta.exponent(), "", expected, actual});
      const std::int64_t bound = atkin_li_bound(conductor_exponent(ps), 1, 0);
      if (actual > bound)
        report.discrepancies.push_back(
            {"bound", m_max, beta.exponent(), "", bound, actual});
      if (actual == 0) report.ps_zero_conductor_betas.push_back(beta.exponent());
    }

    // Both unramified-phase Steinberg twists of beta.
    for (const auto& phase : phases) {
      const PadicCharacter omega(beta, phase);
      const LocalRep sp = LocalRep::special(omega);
      const LocalRep twisted = twist(sp, quad_padic);
      const std::int64_t actual = conductor_exponent(twisted);
      const std::int64_t searched =
          conductor_from_table(pointwise_product(exponent_table(beta, m_max), quad_table));
      const std::int64_t expected = searched == 0 ? 1 : 2 * searched;
      ++report.cases;
      if (actual != expected)
        report.discrepancies.push_back(
            {"special", m_max, beta.exponent(), fraction_string(phase), expected, actual});
      const std::int64_t central_searched = conductor_from_table(
          pointwise_product(exponent_table(beta, m_max), exponent_table(beta, m_max)));
      const std::int64_t bound = atkin_li_bound(conductor_exponent(sp), 1, central_searched);
      if (actual > bound)
        report.discrepancies.push_back(
            {"bound", m_max, beta.exponent(), fraction_string(phase), bound, actual});
    }
  }
  return report;
}

}  // namespace qtwist::oracle
