#include "qtwist/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace qtwist {

namespace {

std::string sc_type_string(ScType type) {
  return type == ScType::type_one ? "I" : "II";
}

ScType sc_type_from_string(const std::string& s) {
  if (s == "I") return ScType::type_one;
  if (s == "II") return ScType::type_two;
  throw std::domain_error("sc_type: expected \"I\" or \"II\"");
}

Json bigint_json(const BigInt& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

}  // namespace

double to_sig12(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return std::strtod(buffer, nullptr);
}

Json to_json(const UnitCharacter& chi) {
  return Json{{"p", chi.prime()}, {"m", chi.level()}, {"k", chi.exponent()}};
}

Json to_json(const PadicCharacter& chi) {
  Json j = to_json(chi.unit());
  j["phase"] = fraction_string(chi.phase());
  j["generic"] = chi.generic();
  return j;
}

Json to_json(const LocalRep& rep) {
  if (rep.is_principal_series()) {
    const auto& ps = std::get<PrincipalSeries>(rep.data());
    return Json{{"kind", "ps"}, {"chi1", to_json(ps.chi1)}, {"chi2", to_json(ps.chi2)}};
  }
  if (rep.is_special()) {
    const auto& sp = std::get<Special>(rep.data());
    return Json{{"kind", "special"}, {"omega", to_json(sp.omega)}};
  }
  const auto& sc = std::get<Supercuspidal>(rep.data());
  Json j{{"kind", "sc"},
         {"central", to_json(sc.central)},
         {"c", sc.conductor},
         {"sc_type", sc_type_string(sc.sc_type)},
         {"dim_rho", sc.dim_rho},
         {"tag", sc.tag}};
  j["exact"] = sc.conductor_exact;
  if (!sc.twist.is_trivial()) j["twist"] = to_json(sc.twist);
  return j;
}

Json to_json(const SimilarityClass& cls) {
  const char* kind = cls.representative.is_principal_series() ? "ps"
                     : cls.representative.is_special()        ? "special"
                                                              : "sc";
  return Json{{"kind", kind},
              {"constant", fraction_string(cls.constant)},
              {"representative", to_json(cls.representative)}};
}

Json to_json(const ClassInventory& inventory) {
  Json classes = Json::array();
  for (const auto& cls : inventory.classes) classes.push_back(to_json(cls));
  return Json{{"p", inventory.p},
              {"c", inventory.conductor},
              {"count", inventory.classes.size()},
              {"classes", classes},
              {"sum_constants", fraction_string(inventory.sum_constants)}};
}

Json to_json(const DensityReport& report) {
  Json factors = Json::array();
  for (const auto& f : report.factors) {
    factors.push_back(Json{{"p", f.p}, {"factor", fraction_string(f.factor)}});
  }
  return Json{{"q", report.q},
              {"qprime", report.qprime},
              {"feasible", report.feasible},
              {"density", fraction_string(report.density)},
              {"factors", factors},
              {"intersection_same_density", report.intersection_same_density}};
}

Json to_json(const MultiplicityReport& report) {
  return Json{{"q", report.q},
              {"s", report.s},
              {"bound", report.bound},
              {"density", fraction_string(report.density)}};
}

Json to_json(const N0Prediction& prediction) {
  return Json{{"value", prediction.value},
              {"branch", prediction.branch == N0Branch::squarefree ? "squarefree"
                                                                   : "nonsquarefree"}};
}

Json to_json(const RealQuadraticField& field) {
  return Json{{"D", field.D},
              {"disc", field.disc},
              {"a", bigint_json(field.a)},
              {"b", bigint_json(field.b)},
              {"unit_norm", field.unit_norm},
              {"regulator", to_sig12(field.regulator)}};
}

Json to_json(const MonomialLatticeReport& report) {
  return Json{{"D", report.D},
              {"phi_epsilon0", to_sig12(report.phi_epsilon0)},
              {"spacing", to_sig12(report.spacing)}};
}

Json to_json(const oracle::TwistAuditReport& report) {
  Json discrepancies = Json::array();
  for (const auto& d : report.discrepancies) {
    discrepancies.push_back(Json{{"kind", d.kind},
                                 {"beta_level", d.beta_level},
                                 {"beta_exponent", d.beta_exponent},
                                 {"phase", d.phase},
                                 {"expected", d.expected},
                                 {"actual", d.actual}});
  }
  return Json{{"p", report.p},
              {"m_max", report.m_max},
              {"cases", report.cases},
              {"discrepancies", discrepancies},
              {"ps_zero_conductor_betas", report.ps_zero_conductor_betas}};
}

PadicCharacter padic_character_from_json(const Json& j) {
  const UnitCharacter unit(j.at("p").get<std::int64_t>(), j.at("m").get<std::int64_t>(),
                           j.at("k").get<std::int64_t>());
  const Rational phase =
      j.contains("phase") ? parse_fraction(j.at("phase").get<std::string>()) : Rational(0);
  const bool generic = j.contains("generic") && j.at("generic").get<bool>();
  return PadicCharacter(unit, phase, generic);
}

LocalRep local_rep_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "ps") {
    return LocalRep::principal_series(padic_character_from_json(j.at("chi1")),
                                      padic_character_from_json(j.at("chi2")));
  }
  if (kind == "special") {
    return LocalRep::special(padic_character_from_json(j.at("omega")));
  }
  if (kind == "sc") {
    return LocalRep::supercuspidal(padic_character_from_json(j.at("central")),
                                   j.at("c").get<std::int64_t>(),
                                   sc_type_from_string(j.at("sc_type").get<std::string>()),
                                   j.at("dim_rho").get<std::int64_t>(),
                                   j.value("tag", std::string{}));
  }
  throw std::domain_error("local_rep: unknown kind '" + kind + "'");
}

}  // namespace qtwist
