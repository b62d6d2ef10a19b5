#pragma once

#include <json.hpp>

#include "qmono/report.hpp"
#include "qmono/rsz.hpp"
#include "qmono/stabilization.hpp"

namespace qmono {

// Stable-schema structured output. Key order is fixed (ordered_json), so
// serialization is byte-deterministic for equal inputs.
using Json = nlohmann::ordered_json;

Json to_json(const Quiver& q);
Json to_json(const ComponentInfo& component);
Json to_json(const SingularityReport& report);
Json to_json(const StabilizationResult& result);
Json to_json(const CrossCheckReport& report);

}  // namespace qmono
