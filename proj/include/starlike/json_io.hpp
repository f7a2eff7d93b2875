#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "starlike/criteria.hpp"
#include "starlike/disk.hpp"
#include "starlike/harness.hpp"
#include "starlike/series.hpp"

namespace starlike {

using json = nlohmann::json;

// Series literals are arrays of [re, im] pairs, index 0 first.
void to_json(json& j, const PowerSeries& s);
PowerSeries series_from_json(const json& j);

void to_json(json& j, const BoundEstimate& e);
void to_json(json& j, const RadialGrid& g);
void to_json(json& j, const CriterionParams& p);
void to_json(json& j, const VerificationReport& r);

/// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i` (whitespace not allowed).
/// Throws std::invalid_argument on malformed input.
complex parse_complex(std::string_view text);

std::string format_complex(complex z);

/// Shortest text that reads back to the same double.
std::string format_double(double v);

} // namespace starlike
