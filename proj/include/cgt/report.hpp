#pragma once

#include <json.hpp>

#include "cgt/carter.hpp"
#include "cgt/example_check.hpp"
#include "cgt/series.hpp"

namespace cgt {

using Json = nlohmann::ordered_json;

Json json_group(const PermGroup& g);
Json json_certificate(const CarterCertificate& c);
Json json_witness(const CarterWitness& w);
Json json_outcome(const CarterOutcome& o);
Json json_chief_series(const ChiefSeriesData& s);
Json json_condition_e(const ConditionEReport& r);
Json json_example(const ExampleReport& r);

}  // namespace cgt
