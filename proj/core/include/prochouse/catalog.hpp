#pragma once

#include <map>
#include <string>
#include <vector>

#include "prochouse/geometry.hpp"
#include "prochouse/types.hpp"

namespace prochouse {

// Per-type placement annotations. Room weights follow the 0..3 scale: 0 never
// appears in that room type, 3 nearly always does.
struct AssetType {
    std::string name;
    bool placeable_on_floor = false;
    uint8_t placements = 0;  // bitmask of PlacementZone, nonempty iff placeable_on_floor
    std::array<int, kRoomTypeCount> room_weights{};
    bool allow_duplicates_in_room = true;
    std::string material_class;
    bool color_randomizable = false;
    bool toggleable = false;
    bool dirtyable = false;
    bool openable = false;
    double object_bias = 0.0;
    double receptacle_bias = 0.2;
    // Structural roles ("" for ordinary objects).
    std::string wall_placement;  // window | painting | television
    std::string door_kind;       // doorway | door_frame

    int room_weight(RoomType t) const { return room_weights[static_cast<int>(t)]; }
    bool supports(PlacementZone z) const { return placements & placement_bit(z); }
};

struct AssetInstance {
    std::string id;
    std::string asset_type;
    Vec3 bbox;  // extents in meters: x width, y height, z depth
    Split split = Split::Any;
    bool is_receptacle = false;
    bool wall_mountable = false;  // televisions with no base may hang on walls
    std::vector<Vec3> visibility_points;
};

struct MaterialCatalog {
    std::vector<Rgb> solid_colors;
    std::vector<std::string> wall_textures;
    std::vector<std::string> floor_materials;
    std::map<std::string, std::vector<std::string>> skyboxes;          // time of day -> ids
    std::map<std::string, std::vector<std::string>> object_materials;  // class -> ids

    int skybox_count() const {
        int n = 0;
        for (const auto& [tod, ids] : skyboxes) n += static_cast<int>(ids.size());
        return n;
    }
};

// How often each object type was seen on each receptacle type, stored as the
// raw counts so the ratio provenance stays visible in the data file.
struct SpawnEntry {
    int occurrences = 0;
    int receptacle_count = 1;
    double p = 0.0;  // min(1, occurrences / receptacle_count)
};

struct SpawnTable {
    std::map<std::pair<std::string, std::string>, SpawnEntry> entries;
    std::map<std::string, std::vector<std::string>> objects_by_receptacle;  // sorted object types

    double probability(const std::string& receptacle_type, const std::string& object_type) const {
        auto it = entries.find({receptacle_type, object_type});
        return it == entries.end() ? 0.0 : it->second.p;
    }
};

enum class AnchorV { Top, Center, Bottom };
enum class AnchorH { Left, Center, Right };

struct AssetSampler {
    std::string id;
    std::string asset_type;
    std::vector<std::string> candidates;  // instance ids, all of asset_type
};

struct SagEdge {
    std::string parent;
    std::string child;
    AnchorV anchor_v = AnchorV::Center;
    AnchorH anchor_h = AnchorH::Center;
    AnchorV pivot_v = AnchorV::Center;
    AnchorH pivot_h = AnchorH::Center;
    Vec2 offset;            // parent anchor point -> child pivot point
    double rotation = 0.0;  // child yaw within the group, multiple of 90
    bool on_top = false;    // child rests on the parent's top surface
    bool allow_overlap = false;  // deliberate footprint overlap (chairs tucked under tables)
};

struct SagDef {
    std::string id;
    std::vector<AssetSampler> samplers;
    std::vector<SagEdge> edges;                   // parent -> child, forms a tree
    std::vector<std::vector<std::string>> links;  // sampler groups sharing one instance
    uint8_t placements = 0;
    std::array<int, kRoomTypeCount> room_weights{};
    std::string root;  // sampler with no parent

    int room_weight(RoomType t) const { return room_weights[static_cast<int>(t)]; }
    bool supports(PlacementZone z) const { return placements & placement_bit(z); }
    const AssetSampler* find_sampler(const std::string& id_) const {
        for (const auto& s : samplers)
            if (s.id == id_) return &s;
        return nullptr;
    }
};

class AssetCatalog {
public:
    int schema_version = 0;
    std::map<std::string, AssetType> types;
    std::vector<AssetInstance> instances;  // sorted by id
    MaterialCatalog materials;
    SpawnTable spawn_table;
    std::vector<SagDef> sags;  // sorted by id

    const AssetType* find_type(const std::string& name) const;
    const AssetInstance* find_instance(const std::string& id) const;
    const SagDef* find_sag(const std::string& id) const;

    // Instances of one type matching the split, sorted by id.
    std::vector<const AssetInstance*> instances_of_type(const std::string& type, Split split) const;

    // Floor candidates for a room: type must weigh > 0 in the room, support the
    // placement zone, match the split, and the padded footprint must fit the
    // rectangle in at least one orientation.
    std::vector<const AssetInstance*> filter_floor_assets(RoomType room, PlacementZone placement,
                                                          Split split, double max_w, double max_d,
                                                          double pad = 0.5) const;

    std::vector<const AssetInstance*> door_assets(const std::string& kind, Split split) const;
    std::vector<const AssetInstance*> wall_assets(const std::string& wall_placement, Split split,
                                                  bool mountable_only = false) const;

    double min_door_width(Split split) const;
};

// True when the object's padded top-down box fits the rectangle in either
// orientation.
inline bool fits_with_pad(double obj_w, double obj_d, double rect_w, double rect_d, double pad) {
    return (obj_d + pad <= rect_w && obj_w + pad <= rect_d) ||
           (obj_d + pad <= rect_d && obj_w + pad <= rect_w);
}

AssetCatalog load_catalog(const std::string& path);
AssetCatalog parse_catalog_text(const std::string& text);
std::string serialize_catalog(const AssetCatalog& catalog);

}  // namespace prochouse
