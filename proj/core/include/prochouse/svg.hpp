#pragma once

#include <string>

#include "prochouse/catalog.hpp"
#include "prochouse/house.hpp"

namespace prochouse {

struct SvgOptions {
    double px_per_meter = 40.0;
    double margin_px = 20.0;
    bool draw_objects = true;
    bool draw_lights = false;
};

// Deterministic top-down rendering: room polygons colored by type, walls,
// door / window markers, object footprints.
std::string render_svg(const House& house, const AssetCatalog& catalog,
                       const SvgOptions& options = {});

}  // namespace prochouse
