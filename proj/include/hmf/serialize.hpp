#pragma once

// JSON/CSV documents for series interchange.  Rationals travel as "p/q"
// strings so no float ever enters an exact output.

#include "hmf/hilbert.hpp"

#include <json.hpp>

#include <string>

namespace hmf {

inline constexpr int kSchemaVersion = 1;

nlohmann::json series_to_json(const HilbertSeries& s);
HilbertSeries series_from_json(const nlohmann::json& doc);

// header a,b,x_num,x_den,y_num,y_den; rows in monomial order
std::string series_to_csv(const HilbertSeries& s);

}  // namespace hmf
