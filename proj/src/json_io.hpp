#pragma once

#include <json.hpp>

#include "enumerate.hpp"
#include "juggling.hpp"
#include "ring.hpp"

namespace dsring {

nlohmann::json coeff_to_json(const Coeff& c);
Coeff coeff_from_json(const nlohmann::json& j, Base expected);
nlohmann::json partition_to_json(const BoxedPartition& p);
BoxedPartition partition_from_json(const nlohmann::json& j);
nlohmann::json dream_to_json(const PipeDream& p);
nlohmann::json expansion_to_json(const Expansion& e);
nlohmann::json ring_to_json(const RingElement& x);
nlohmann::json pattern_to_json(const JugglingPattern& j);

}  // namespace dsring
