#pragma once

#include <json.hpp>

#include "sgideal/census.hpp"
#include "sgideal/classify.hpp"
#include "sgideal/verify.hpp"

namespace sgideal {

/// Order-preserving JSON, so identical inputs dump to identical bytes.
using Json = nlohmann::ordered_json;

Json to_json(const NumericalSemigroup& s);
Json to_json(const RelativeIdeal& e);
Json to_json(const ClassificationReport& r);
Json to_json(const IdealRecord& r);
Json to_json(const IdealCensus& census);
Json to_json(const Counterexample& cx);
Json to_json(const VerificationReport& r);
Json to_json(const std::vector<VerificationReport>& reports);

/// Inverses for the round-trip schema. Each throws std::invalid_argument
/// on missing or ill-typed fields.
NumericalSemigroup semigroup_from_json(const Json& j);
RelativeIdeal ideal_from_json(const Json& j, RelativeIdeal::SemigroupPtr semigroup);
IdealCensus census_from_json(const Json& j);

}  // namespace sgideal
