#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prochouse/catalog.hpp"
#include "prochouse/connectivity.hpp"
#include "prochouse/house.hpp"
#include "prochouse/layout.hpp"
#include "prochouse/rng.hpp"
#include "prochouse/sag.hpp"

namespace prochouse {

struct FurnishParams {
    double middle_margin = 0.35;  // each side of middle objects
    double edge_margin = 0.5;     // in front of edge/corner objects only
    double p_largest_rect = 0.8;
    double p_edge = 0.7;
    double sag_preference = 0.6;  // groups win over singletons this often when both fit
    double painting_block_height = 1.15;
    double wall_object_max_y = 3.0;  // w_max = min(this, ceiling)
    double tv_p_living = 0.8;
    double tv_p_kitchen = 0.25;
    double tv_p_bedroom = 0.4;
    double b_house_min = -0.3;
    double b_house_max = 0.1;
    double b_house_alpha = 3.5;
    double b_house_beta = 1.9;
    int pose_attempts = 5;
    int max_per_receptacle = 3;  // s_max
    double p_color_rand = 0.8;
    double p_material_rand = 0.8;
    double opening_clearance = 0.7;  // strip kept free on both sides of a door span
};

// Free floor region of one room: the floor polygon minus subtracted boxes.
struct OpenArea {
    Polygon outer;            // meters, CCW
    std::vector<Rect> holes;
    std::vector<Rect> dead_rects;  // rectangles removed from consideration

    void subtract(const Rect& r) { holes.push_back(r); }
    void kill_rect(const Rect& r) { dead_rects.push_back(r); }
};

// All maximal axis-aligned rectangles of the corner-point divider grid lying
// wholly inside the open area, largest first (ties by position), dead
// rectangles excluded.
std::vector<Rect> decompose_open_area(const OpenArea& area);

// Iteration budget r_i: {1, 4, 5, 6, 7} with probabilities {1,2,4,20,173}/200.
int sample_iteration_budget(Rng& rng);
// Window budget n_w: {0, 1, 2} with probabilities {0.125, 0.375, 0.5}.
int sample_window_budget(Rng& rng);
// Painting budget n_p: {0..4} with probabilities {0.05, 0.1, 0.5, 0.25, 0.1}.
int sample_painting_budget(Rng& rng);
// Per-house receptacle spawn bias.
double sample_house_bias(const FurnishParams& params, Rng& rng);

struct IdGen {
    int next_object = 0;
    int next_group = 0;
    std::string object_id() { return "obj_" + std::to_string(next_object++); }
};

std::vector<SceneObject> place_floor_objects(const FloorPlan& plan, int room_id,
                                             const std::vector<Wall>& walls,
                                             const std::vector<Opening>& openings,
                                             const AssetCatalog& catalog, Split split,
                                             const FurnishParams& params, IdGen& ids, Rng& rng);

std::vector<SceneObject> place_windows(const FloorPlan& plan, int room_id,
                                       const std::vector<Wall>& walls,
                                       const std::vector<Opening>& openings,
                                       const std::vector<SceneObject>& floor_objects,
                                       const AssetCatalog& catalog, Split split,
                                       double ceiling_height, const FurnishParams& params,
                                       IdGen& ids, Rng& rng);

std::vector<SceneObject> place_paintings(const FloorPlan& plan, int room_id,
                                         const std::vector<Wall>& walls,
                                         const std::vector<Opening>& openings,
                                         const std::vector<SceneObject>& floor_objects,
                                         const std::vector<SceneObject>& prior_wall_objects,
                                         const AssetCatalog& catalog, Split split,
                                         double ceiling_height, const FurnishParams& params,
                                         IdGen& ids, Rng& rng);

std::optional<SceneObject> place_television(const FloorPlan& plan, int room_id,
                                            const std::vector<Wall>& walls,
                                            const std::vector<Opening>& openings,
                                            const std::vector<SceneObject>& floor_objects,
                                            const std::vector<SceneObject>& prior_wall_objects,
                                            const AssetCatalog& catalog, Split split,
                                            double ceiling_height, const FurnishParams& params,
                                            IdGen& ids, Rng& rng);

// Spawns small objects on every receptacle's top face, biased per house,
// receptacle type, and object type.
void place_surface_objects(House& house, const AssetCatalog& catalog, const FurnishParams& params,
                           IdGen& ids, Rng& rng);

// Color overrides for color-randomizable types, material swaps within each
// type's material class. Leaves walls, floors, and ceilings alone.
void randomize_appearance(House& house, const AssetCatalog& catalog, const FurnishParams& params,
                          Rng& rng);

void randomize_states(House& house, const AssetCatalog& catalog, Rng& rng);

// Clearance boxes subtracted from a room's open area before placing objects:
// doorway swings plus a thin strip on both sides of every passable opening.
std::vector<Rect> opening_clearances(int room_id, const std::vector<Wall>& walls,
                                     const std::vector<Opening>& openings,
                                     const FurnishParams& params);

}  // namespace prochouse
