#pragma once

#include <json.hpp>

#include "dioph/surface.hpp"

namespace dioph {

/// Serializes a surface model: variables, weights, constants, and equations
/// as coefficient maps keyed by comma-joined exponent vectors. Rationals are
/// "num/den" strings (denominator omitted when 1).
nlohmann::ordered_json model_to_json(const SurfaceModel& s);

}  // namespace dioph
