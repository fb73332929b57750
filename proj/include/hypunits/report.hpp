#pragma once

#include <json.hpp>

#include "hypunits/classify.hpp"
#include "hypunits/enumerate.hpp"
#include "hypunits/green.hpp"
#include "hypunits/raloop.hpp"
#include "hypunits/verdict.hpp"

namespace hypunits {

// Structured records with a stable field order. Element references are
// 1-based indices, matching the external table formats.
using Json = nlohmann::ordered_json;

Json to_json(const CayleyTable& s, const GreenData& g, const PrincipalSeries& ps);
Json to_json(const ClassificationReport& r);
Json to_json(const AlgebraVerdict& v);
Json to_json(const CrosscheckRecord& r, const CayleyTable* table = nullptr);
Json to_json(const RefuteReport& r);
Json to_json(const LoopClassification& c);
Json to_json(const CensusRow& row, bool include_runtime);

ClassificationReport classification_from_json(const Json& j);

std::string rational_string(const Rational& q);
Rational parse_rational(const std::string& s);

}  // namespace hypunits
