#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "genus1/models.hpp"

namespace genus1 {

/// Coefficient keys of the model file for degrees 1..3 (in model field order).
const std::vector<std::string>& coefficient_keys(int degree);

/// Reads a model file:
///   {"degree": n, "coefficients": {...}}
/// Rationals are strings "n" or "n/d" (plain JSON integers are accepted too).
/// Degree 4 takes {"q1": 4x4, "q2": 4x4} Gram arrays, degree 5 takes
/// {"matrix": 5x5} of linear-form strings in x0..x4.
/// Throws ParseError; location() points at the offending element.
GenusOneModel parse_model(std::string_view text);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string serialize_model(const GenusOneModel& m);

}  // namespace genus1
