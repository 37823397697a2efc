#pragma once

#include <json.hpp>

#include "dubious/scenario.hpp"

namespace dubious
{

// JSON-level entry points shared with the run manifest.
Scenario scenario_from_json(const nlohmann::json& doc);
nlohmann::json scenario_to_json(const Scenario& scenario);

}  // namespace dubious
