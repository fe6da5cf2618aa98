#include "qtwist/rational.hpp"

#include <stdexcept>

namespace qtwist {

std::string fraction_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_fraction(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(s));
    }
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::domain_error("parse_fraction: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::domain_error("parse_fraction: malformed fraction '" + s + "'");
  }
}

Rational rational_mod_one(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  Rational out = r - Rational(q);
  out.canonicalize();
  return out;
}

std::int64_t rational_to_int64(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() != 1) throw std::domain_error("rational_to_int64: not an integer");
  if (!c.get_num().fits_slong_p()) throw std::overflow_error("rational_to_int64: out of range");
  return c.get_num().get_si();
}

}  // namespace qtwist
