#pragma once

#include <string>
#include <string_view>

#include "tsx/intervals.hpp"

namespace tsx {

/// JSON form of an interval model:
///   {"classes": [...], "features": [...], "intervals": [[[lo, hi], ...], ...]}
/// with `intervals` indexed [class][feature].
std::string model_to_json(const IntervalModel& model);
IntervalModel model_from_json(std::string_view json);

}  // namespace tsx
