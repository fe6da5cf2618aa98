#include "qtwist/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <memory>

#include "qtwist/json_io.hpp"

namespace qtwist {

namespace {

constexpr const char* kSchema = "qtwist/1";

Json make_envelope(const std::string& command, Json inputs, Json outputs,
                   std::vector<std::string> citations) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  for (auto& [key, value] : outputs.items()) j[key] = std::move(value);
  j["citations"] = std::move(citations);
  return j;
}

void emit(std::ostream& out, const Json& j, bool pretty) {
  out << (pretty ? j.dump(2) : j.dump()) << "\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact quadratic-twist calculus for GL(2) local representations"};
  app.set_help_flag("--help", "print usage");
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");
  app.require_subcommand(1);

  Json result;

  // density --q Q --qprime Q'
  {
    auto* cmd = app.add_subcommand("density", "twist-paired newform density");
    cmd->fallthrough();
    auto q = std::make_shared<std::int64_t>(0);
    auto qprime = std::make_shared<std::int64_t>(0);
    cmd->add_option("--q", *q, "level")->required();
    cmd->add_option("--qprime", *qprime, "twist conductor (odd squarefree > 1)")->required();
    cmd->callback([&result, q, qprime] {
      result = make_envelope("density", Json{{"q", *q}, {"qprime", *qprime}},
                             to_json(density(*q, *qprime)),
                             {"twist-invariant-density-product", "conductor-trichotomy"});
    });
  }

  // multiplicity --q Q
  {
    auto* cmd = app.add_subcommand("multiplicity", "spectral multiplicity lower bound");
    cmd->fallthrough();
    auto q = std::make_shared<std::int64_t>(0);
    cmd->add_option("--q", *q, "level")->required();
    cmd->callback([&result, q] {
      result = make_envelope("multiplicity", Json{{"q", *q}},
                             to_json(multiplicity_bound(*q)),
                             {"multiplicity-lower-bound-two-power-s"});
    });
  }

  // n0 --q Q
  {
    auto* cmd = app.add_subcommand("n0", "stability predictor for odd levels");
    cmd->fallthrough();
    auto q = std::make_shared<std::int64_t>(0);
    cmd->add_option("--q", *q, "odd level")->required();
    cmd->callback([&result, q] {
      result = make_envelope("n0", Json{{"q", *q}}, to_json(n0_prediction(*q)),
                             {"hecke-distinguishing-prime-prediction"});
    });
  }

  // gamma1 --p P --m M
  {
    auto* cmd = app.add_subcommand("gamma1", "all-character multiplicity at level p^m");
    cmd->fallthrough();
    auto p = std::make_shared<std::int64_t>(0);
    auto m = std::make_shared<std::int64_t>(0);
    cmd->add_option("--p", *p, "odd prime")->required();
    cmd->add_option("--m", *m, "exponent, at least 4")->required();
    cmd->callback([&result, p, m] {
      const BigInt value = gamma1_multiplicity(*p, *m);
      Json outputs;
      if (value.fits_slong_p()) outputs["value"] = value.get_si();
      else outputs["value"] = value.get_str();
      result = make_envelope("gamma1", Json{{"p", *p}, {"m", *m}}, outputs,
                             {"primitive-character-count-multiplicity"});
    });
  }

  // twist --rep JSON --omega JSON
  {
    auto* cmd = app.add_subcommand("twist", "twist a local representation by a character");
    cmd->fallthrough();
    auto rep_text = std::make_shared<std::string>();
    auto omega_text = std::make_shared<std::string>();
    cmd->add_option("--rep", *rep_text, "representation as JSON")->required();
    cmd->add_option("--omega", *omega_text, "character as JSON")->required();
    cmd->callback([&result, rep_text, omega_text] {
      Json rep_json, omega_json;
      try {
        rep_json = Json::parse(*rep_text);
        omega_json = Json::parse(*omega_text);
      } catch (const Json::parse_error& e) {
        throw std::domain_error(std::string("twist: malformed JSON argument: ") + e.what());
      }
      const LocalRep rep = local_rep_from_json(rep_json);
      const PadicCharacter omega = padic_character_from_json(omega_json);
      const LocalRep twisted = twist(rep, omega);
      Json outputs;
      outputs["rep"] = to_json(twisted);
      outputs["conductor"] = conductor_exponent(twisted);
      outputs["exactness"] = conductor_is_exact(twisted) ? "exact" : "bound";
      result = make_envelope("twist", Json{{"rep", rep_json}, {"omega", omega_json}},
                             outputs,
                             {"conductor-twist-calculus", "conductor-upper-bound"});
    });
  }

  // classify --p P
  {
    auto* cmd = app.add_subcommand("classify", "representations of conductor exponent 1");
    cmd->fallthrough();
    auto p = std::make_shared<std::int64_t>(0);
    cmd->add_option("--p", *p, "odd prime")->required();
    cmd->callback([&result, p] {
      Json reps = Json::array();
      for (const auto& rep : classify_conductor_one(*p)) reps.push_back(to_json(rep));
      result = make_envelope("classify", Json{{"p", *p}}, Json{{"reps", reps}},
                             {"conductor-one-classification"});
    });
  }

  // classes --p P --c C
  {
    auto* cmd = app.add_subcommand("classes", "similarity class census");
    cmd->fallthrough();
    auto p = std::make_shared<std::int64_t>(0);
    auto c = std::make_shared<std::int64_t>(0);
    cmd->add_option("--p", *p, "odd prime")->required();
    cmd->add_option("--c", *c, "conductor exponent in {0, 1, 2}")->required();
    cmd->callback([&result, p, c] {
      result = make_envelope("classes", Json{{"p", *p}, {"c", *c}},
                             to_json(enumerate_classes(*p, *c)),
                             {"similarity-class-census", "weyl-local-constants"});
    });
  }

  // weyl --q Q
  {
    auto* cmd = app.add_subcommand("weyl", "leading newform-count coefficient");
    cmd->fallthrough();
    auto q = std::make_shared<std::int64_t>(0);
    cmd->add_option("--q", *q, "odd cube-free level")->required();
    cmd->callback([&result, q] {
      result = make_envelope("weyl", Json{{"q", *q}},
                             Json{{"constant", fraction_string(newform_weyl_constant(*q))}},
                             {"weyl-local-constants", "similarity-class-census"});
    });
  }

  // gauss-sum --p P --m M --k K
  {
    auto* cmd = app.add_subcommand("gauss-sum", "Gauss sum of a primitive character");
    cmd->fallthrough();
    auto p = std::make_shared<std::int64_t>(0);
    auto m = std::make_shared<std::int64_t>(0);
    auto k = std::make_shared<std::int64_t>(0);
    cmd->add_option("--p", *p, "odd prime")->required();
    cmd->add_option("--m", *m, "level, at least 1")->required();
    cmd->add_option("--k", *k, "exponent against the canonical root")->required();
    cmd->callback([&result, p, m, k] {
      const UnitCharacter chi(*p, *m, *k);
      const auto tau = gauss_sum(chi);
      Json outputs;
      outputs["tau"] = Json{{"re", to_sig12(tau.real())}, {"im", to_sig12(tau.imag())}};
      outputs["abs2"] = to_sig12(std::norm(tau));
      result = make_envelope("gauss-sum", Json{{"p", *p}, {"m", *m}, {"k", *k}}, outputs,
                             {"gauss-sum-newvector-mechanism"});
    });
  }

  // monomial --D D [--T T] [--cosets N]
  {
    auto* cmd = app.add_subcommand("monomial", "unit lattice and spectral spacing");
    cmd->fallthrough();
    auto D = std::make_shared<std::int64_t>(0);
    auto T = std::make_shared<double>(0.0);
    auto cosets = std::make_shared<std::int64_t>(1);
    cmd->add_option("--D", *D, "squarefree D > 1")->required();
    cmd->add_option("--T", *T, "spectral parameter bound");
    cmd->add_option("--cosets", *cosets, "number of finite-character cosets");
    cmd->callback([&result, D, T, cosets] {
      const RealQuadraticField field = fundamental_unit(*D);
      const MonomialLatticeReport report = monomial_spacing(*D);
      Json outputs;
      outputs["field"] = to_json(field);
      outputs["phi_epsilon0"] = to_sig12(report.phi_epsilon0);
      outputs["spacing"] = to_sig12(report.spacing);
      Json inputs{{"D", *D}, {"cosets", *cosets}};
      if (*T > 0) {
        inputs["T"] = *T;
        outputs["count_bound"] = monomial_count_bound(*D, *T, *cosets);
      }
      result = make_envelope("monomial", inputs, outputs,
                             {"unit-lattice-spectral-spacing", "monomial-linear-count"});
    });
  }

  // audit --p P --mmax M
  {
    auto* cmd = app.add_subcommand("audit", "exhaustive twist audit against value tables");
    cmd->fallthrough();
    auto p = std::make_shared<std::int64_t>(0);
    auto mmax = std::make_shared<std::int64_t>(0);
    cmd->add_option("--p", *p, "odd prime")->required();
    cmd->add_option("--mmax", *mmax, "maximal character level, at most 4")->required();
    cmd->callback([&result, p, mmax] {
      result = make_envelope("audit", Json{{"p", *p}, {"mmax", *mmax}},
                             to_json(oracle::exhaustive_twist_audit(*p, *mmax)),
                             {"character-table-oracle"});
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return 1;
  } catch (const std::exception& e) {
    emit(out, Json{{"error", e.what()}}, pretty);
    return 2;
  }

  try {
    emit(out, result, pretty);
  } catch (const std::exception& e) {
    emit(out, Json{{"error", e.what()}}, pretty);
    return 2;
  }
  return 0;
}

}  // namespace qtwist
