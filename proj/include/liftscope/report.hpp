#pragma once

// Report rendering: JSON (rationals as "p/q" strings), CSV census tables, and
// a plain-text component table.

#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "liftscope/census.hpp"
#include "liftscope/pipeline.hpp"

namespace liftscope {

nlohmann::json to_json(const LiftReport& report, const CensusSeries* census = nullptr);
nlohmann::json to_json(const CensusSeries& census);
nlohmann::json to_json(const ActivityResult& activity);

void write_csv(std::ostream& os, const CensusSeries& census);
void write_text(std::ostream& os, const LiftReport& report);

}  // namespace liftscope
