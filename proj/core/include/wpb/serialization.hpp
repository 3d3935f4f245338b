#pragma once

#include "wpb/weak_distribution.hpp"

#include <nlohmann/json.hpp>

namespace wpb {

/// [re_num, re_den, im_num, im_den, rad_num, rad_den] as decimal strings.
nlohmann::json to_json(const ExactScalar& c);
ExactScalar exact_scalar_from_json(const nlohmann::json& j);

/// {"poly": {"n": [...]}, "delta": {"n": [...]}} with exact components.
nlohmann::json to_json(const WeakDistribution& f);
WeakDistribution weak_distribution_from_json(const nlohmann::json& j);

}  // namespace wpb
