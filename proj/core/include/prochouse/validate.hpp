#pragma once

#include <map>
#include <string>
#include <vector>

#include "prochouse/catalog.hpp"
#include "prochouse/house.hpp"
#include "prochouse/rng.hpp"

namespace prochouse {

struct ValidateParams {
    double cell = 0.25;
    double agent_radius = 0.2;
    double camera_height = 1.0;     // objects taller than this occlude sight lines
    int min_reachable_per_room = 5;
    double reach_distance = 1.0;    // targets count within this range
    int nearest_positions = 6;      // agent positions tested per target instance
};

// Occupancy + reachability on a fixed-pitch grid over the house bounds.
struct NavGrid {
    double cell = 0.25;
    Vec2 origin;
    int w = 0, h = 0;
    std::vector<uint8_t> free;       // agent disc fits here
    std::vector<uint8_t> reachable;  // BFS result from the deterministic seed

    bool in_bounds(int x, int z) const { return x >= 0 && x < w && z >= 0 && z < h; }
    bool is_free(int x, int z) const {
        return in_bounds(x, z) && free[static_cast<size_t>(z) * w + x] != 0;
    }
    bool is_reachable(int x, int z) const {
        return in_bounds(x, z) && reachable[static_cast<size_t>(z) * w + x] != 0;
    }
    Vec2 center(int x, int z) const {
        return {origin.x + (x + 0.5) * cell, origin.z + (z + 0.5) * cell};
    }
    int reachable_count() const;
};

// Builds the grid and runs BFS from the first free cell in scan order.
// Throws NoFreeCell when the agent fits nowhere.
NavGrid reachable_positions(const House& house, const AssetCatalog& catalog,
                            const ValidateParams& params = {});

struct ValidationReport {
    bool pass = false;
    std::vector<int> per_room_reachable;
    std::vector<std::string> failures;
};

// A house passes when every room has at least min_reachable_per_room
// reachable grid positions.
ValidationReport validate_house(const House& house, const AssetCatalog& catalog,
                                const ValidateParams& params = {});

// Instances of the type an agent could stand near and see: some pair of
// (one of the nearest reachable positions, visibility point) has top-down line
// of sight and lies within reach_distance.
std::vector<std::string> reachable_targets(const House& house, const AssetCatalog& catalog,
                                           const NavGrid& grid, const std::string& object_type,
                                           const ValidateParams& params = {});

struct EpisodeTargetState {
    double epsilon = 0.2;
    std::map<std::string, int> sample_counts;
};

// Epsilon-greedy type choice: explore uniformly with probability epsilon,
// otherwise take the least-sampled available type (ties by name).
std::string sample_episode_target(const std::vector<std::string>& available_types,
                                  EpisodeTargetState& state, Rng& rng);

}  // namespace prochouse
