#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "qtwist/cli.hpp"
#include "qtwist/json_io.hpp"

using namespace qtwist;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

Json parse(const RunResult& result) {
  REQUIRE(!result.out.empty());
  return Json::parse(result.out);
}

}  // namespace

TEST_CASE("density command") {
  const auto result = run({"density", "--q", "9", "--qprime", "3"});
  REQUIRE(result.code == 0);
  const Json j = parse(result);
  CHECK(j.at("schema") == "qtwist/1");
  CHECK(j.at("command") == "density");
  CHECK(j.at("feasible") == true);
  CHECK(j.at("density") == "2/5");
  CHECK(j.at("inputs").at("q") == 9);
  CHECK(j.at("citations").is_array());
}

TEST_CASE("multiplicity command") {
  const Json j = parse(run({"multiplicity", "--q", "6"}));
  CHECK(j.at("bound") == 1);
  CHECK(j.at("density") == "1/1");
}

TEST_CASE("n0 command") {
  const Json j = parse(run({"n0", "--q", "49"}));
  CHECK(j.at("value") == 3);
  CHECK(j.at("branch") == "nonsquarefree");
}

TEST_CASE("gamma1 command") {
  const Json j = parse(run({"gamma1", "--p", "3", "--m", "4"}));
  CHECK(j.at("value") == 4);
}

TEST_CASE("classes and weyl commands") {
  const Json classes = parse(run({"classes", "--p", "5", "--c", "2"}));
  CHECK(classes.at("count") == 5);
  CHECK(classes.at("sum_constants") == "19/1");
  for (const auto& cls : classes.at("classes")) {
    CHECK(cls.contains("kind"));
    CHECK(cls.contains("constant"));
  }

  const Json weyl = parse(run({"weyl", "--q", "9"}));
  CHECK(weyl.at("constant") == "5/12");
}

TEST_CASE("classify command") {
  const Json j = parse(run({"classify", "--p", "7"}));
  REQUIRE(j.at("reps").size() == 2);
  CHECK(j.at("reps")[0].at("kind") == "special");
  CHECK(j.at("reps")[1].at("omega").at("phase") == "1/2");
}

TEST_CASE("gauss-sum command") {
  const Json j = parse(run({"gauss-sum", "--p", "7", "--m", "1", "--k", "3"}));
  CHECK(j.at("abs2").get<double>() == doctest::Approx(7.0).epsilon(1e-9));
}

TEST_CASE("monomial command") {
  const Json j = parse(run({"monomial", "--D", "5", "--T", "6.5289"}));
  CHECK(j.at("field").at("a") == 1);
  CHECK(j.at("field").at("b") == 1);
  CHECK(j.at("field").at("unit_norm") == -1);
  CHECK(j.at("count_bound") == 3);
  CHECK(j.at("spacing").get<double>() == doctest::Approx(6.5285).epsilon(1e-4));
}

TEST_CASE("audit command") {
  const Json j = parse(run({"audit", "--p", "3", "--mmax", "2"}));
  CHECK(j.at("discrepancies").empty());
  CHECK(j.at("cases").get<int>() > 0);
}

TEST_CASE("twist command round-trips representations") {
  const LocalRep rep = LocalRep::principal_series(
      PadicCharacter::ramified_quadratic(3), PadicCharacter::ramified_quadratic(3));
  const Json j = parse(run({"twist", "--rep", to_json(rep).dump(), "--omega",
                            to_json(PadicCharacter::ramified_quadratic(3)).dump()}));
  CHECK(j.at("conductor") == 0);
  CHECK(j.at("exactness") == "exact");
  // The output representation re-parses into the documented schema.
  const LocalRep twisted = local_rep_from_json(j.at("rep"));
  CHECK(conductor_exponent(twisted) == 0);

  SUBCASE("supercuspidal twists expose the bound marker") {
    const LocalRep sc = LocalRep::supercuspidal(
        PadicCharacter(UnitCharacter(5, 1, 1)), 2, ScType::type_two, 3, "demo");
    const Json bound = parse(run({"twist", "--rep", to_json(sc).dump(), "--omega",
                                  to_json(PadicCharacter::ramified_quadratic(5)).dump()}));
    CHECK(bound.at("exactness") == "bound");
    CHECK(bound.at("conductor") == 2);
  }
}

TEST_CASE("error handling") {
  SUBCASE("unknown command exits 1 with usage on stderr") {
    const auto result = run({"frobnicate"});
    CHECK(result.code == 1);
    CHECK(result.out.empty());
    CHECK(result.err.find("Usage") != std::string::npos);
  }

  SUBCASE("missing required option exits 1") {
    CHECK(run({"density", "--q", "9"}).code == 1);
  }

  SUBCASE("domain errors exit 2 with a machine-readable body") {
    const auto result = run({"n0", "--q", "8"});
    CHECK(result.code == 2);
    const Json j = parse(result);
    CHECK(j.contains("error"));
  }

  SUBCASE("malformed twist JSON exits 2") {
    const auto result = run({"twist", "--rep", "{", "--omega", "{}"});
    CHECK(result.code == 2);
    CHECK(parse(result).contains("error"));
  }

  SUBCASE("help exits 0") {
    const auto result = run({"--help"});
    CHECK(result.code == 0);
    CHECK(result.out.find("Subcommands") != std::string::npos);
  }
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"density", "--q", "225", "--qprime", "15"},
        {"classes", "--p", "7", "--c", "2"},
        {"monomial", "--D", "13", "--T", "100", "--cosets", "2"},
        {"audit", "--p", "5", "--mmax", "2", "--pretty"}}) {
    const auto first = run(args);
    const auto second = run(args);
    REQUIRE(first.code == 0);
    REQUIRE(first.out == second.out);
  }
}
