#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "prochouse/rng.hpp"
#include "prochouse/types.hpp"

namespace prochouse {

// Weighted tree seeding house generation: internal zones group rooms that must
// be mutually reachable, leaves are concrete rooms.
struct SpecNode {
    bool is_leaf = false;
    RoomType room_type = RoomType::Bedroom;  // leaf only
    double growth_weight = 1.0;
    bool avoid_door_to_parent = false;  // e.g. a bathroom should not gain a second entrance
    std::vector<SpecNode> children;     // zone only, >= 2 entries
};

// Optional per-spec override of the boundary dimension sampling range.
struct BoundaryOverride {
    int x_min = 0, x_max = 0;
    int z_min = 0, z_max = 0;
};

struct RoomSpec {
    std::string id;
    double sampling_weight = 1.0;
    SpecNode root;
    std::optional<BoundaryOverride> boundary_override;

    // Leaves in pre-order; index in this list is the room id within a plan.
    std::vector<const SpecNode*> leaves() const;
    int room_count() const { return static_cast<int>(leaves().size()); }
};

RoomSpec parse_room_spec(const std::string& json_text);
std::string serialize_room_spec(const RoomSpec& spec);

// Whole registry file: a JSON array of specs.
std::vector<RoomSpec> load_room_specs(const std::string& path);
std::vector<RoomSpec> parse_room_specs_text(const std::string& text);

// Weighted choice proportional to sampling_weight.
const RoomSpec& sample_room_spec(const std::vector<RoomSpec>& registry, Rng& rng);

}  // namespace prochouse
