#pragma once

#include <string>

#include "prochouse/house.hpp"

namespace prochouse {

// Canonical house JSON: keys sorted, numbers rounded to 6 decimals, 2-space
// indent. parse_house(emit_json(h)) reproduces the same bytes.
std::string emit_json(const House& house);

House parse_house(const std::string& json_text);
House load_house(const std::string& path);

}  // namespace prochouse
