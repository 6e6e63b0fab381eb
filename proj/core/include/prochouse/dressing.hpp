#pragma once

#include <map>
#include <string>
#include <vector>

#include "prochouse/catalog.hpp"
#include "prochouse/house.hpp"
#include "prochouse/layout.hpp"
#include "prochouse/rng.hpp"

namespace prochouse {

struct DressingParams {
    double p_walls_same = 0.35;
    double p_wall_solid = 0.5;
    double p_floors_same = 0.15;
    double ceiling_min = 2.5;
    double ceiling_max = 7.0;
    double ceiling_alpha = 1.25;
    double ceiling_beta = 5.5;
    double light_drop = 0.1;        // point lights sit this far below the ceiling
    double lamp_intensity = 0.65;
    double room_light_intensity = 1.0;
    // Per-skybox weight multiplier by time of day; unlisted groups weigh 1.
    std::map<std::string, double> skybox_group_weights;
};

StructureMaterials sample_structure_materials(const FloorPlan& plan,
                                              const MaterialCatalog& materials,
                                              const DressingParams& params, Rng& rng);

double sample_ceiling_height(const DressingParams& params, Rng& rng);

// One skybox over the whole catalog, uniform by default, reweighted per time
// of day via DressingParams. Returns (id, time of day).
std::pair<std::string, std::string> sample_skybox(const MaterialCatalog& materials,
                                                  const DressingParams& params, Rng& rng);

// A ceiling light per room at the floor-polygon centroid (or the most interior
// cell when the centroid falls outside), plus one light per lamp object, plus
// the skybox-driven directional light.
Lighting place_lights(const FloorPlan& plan, const std::vector<SceneObject>& objects,
                      const AssetCatalog& catalog, double ceiling_height,
                      const std::string& skybox_id, const std::string& time_of_day,
                      const DressingParams& params);

}  // namespace prochouse
