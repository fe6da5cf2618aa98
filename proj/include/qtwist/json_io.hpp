#pragma once

#include <json.hpp>

#include "qtwist/characters.hpp"
#include "qtwist/global.hpp"
#include "qtwist/local_rep.hpp"
#include "qtwist/monomial.hpp"
#include "qtwist/oracle.hpp"
#include "qtwist/similarity.hpp"

namespace qtwist {

using Json = nlohmann::ordered_json;

// Exact rationals serialize as "num/den" strings in lowest terms.
Json to_json(const UnitCharacter& chi);
Json to_json(const PadicCharacter& chi);
Json to_json(const LocalRep& rep);
Json to_json(const SimilarityClass& cls);
Json to_json(const ClassInventory& inventory);
Json to_json(const DensityReport& report);
Json to_json(const MultiplicityReport& report);
Json to_json(const N0Prediction& prediction);
Json to_json(const RealQuadraticField& field);
Json to_json(const MonomialLatticeReport& report);
Json to_json(const oracle::TwistAuditReport& report);

PadicCharacter padic_character_from_json(const Json& j);
LocalRep local_rep_from_json(const Json& j);

// Doubles rounded to 12 significant digits before serialization.
double to_sig12(double x);

}  // namespace qtwist
