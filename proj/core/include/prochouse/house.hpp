#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prochouse/geometry.hpp"
#include "prochouse/types.hpp"

namespace prochouse {

inline constexpr int kExterior = -1;
inline constexpr int kHouseSchemaVersion = 1;

// Straight wall run between two rooms (or a room and the outside). Walls are
// axis-aligned: `axis` is the axis the wall runs along.
struct Wall {
    int id = 0;
    char axis = 'x';     // 'x': runs along x at z = coord; 'z': runs along z at x = coord
    double coord = 0.0;  // meters
    double lo = 0.0;     // run extent, meters
    double hi = 0.0;
    int room_neg = kExterior;  // room on the lower-coordinate side of `coord`
    int room_pos = kExterior;  // room on the higher side

    double length() const { return hi - lo; }
    Vec2 p0() const { return axis == 'x' ? Vec2{lo, coord} : Vec2{coord, lo}; }
    Vec2 p1() const { return axis == 'x' ? Vec2{hi, coord} : Vec2{coord, hi}; }
    Vec2 point_at(double offset) const {
        return axis == 'x' ? Vec2{lo + offset, coord} : Vec2{coord, lo + offset};
    }
    bool touches(int room) const { return room_neg == room || room_pos == room; }
    int other_room(int room) const { return room_neg == room ? room_pos : room_neg; }
};

enum class OpeningKind { Doorway, DoorFrame, OpenWall, ExteriorDoor };
const char* to_string(OpeningKind k);

struct Opening {
    int id = 0;
    OpeningKind kind = OpeningKind::Doorway;
    int wall = 0;
    int room_a = 0;
    int room_b = kExterior;
    std::string asset_id;  // empty for open walls
    double offset = 0.0;   // along the wall from its lo end, meters
    double width = 0.0;
    int open_into = kExterior;  // doorway swing side (room id); exterior doors stay closed

    // Swing clearance: the door-width square on the opening's open side.
    std::optional<Rect> swing_rect(const Wall& w) const;
    bool passable() const { return kind != OpeningKind::ExteriorDoor; }
};

struct RoomInfo {
    int id = 0;
    RoomType type = RoomType::Bedroom;
    Polygon floor_polygon;  // meters, CCW
    std::string wall_material;
    std::optional<Rgb> wall_color;  // set when the wall material is a solid color
    std::string floor_material;
};

enum class ObjectPlacement { Floor, Wall, Surface, SagMember };
const char* to_string(ObjectPlacement p);

struct SceneObject {
    std::string id;
    std::string asset_id;
    std::string asset_type;
    Vec3 position;          // center of the footprint, y = bottom face height
    double rotation = 0.0;  // yaw degrees, multiple of 90 for floor objects
    ObjectPlacement placement = ObjectPlacement::Floor;
    PlacementZone zone = PlacementZone::Middle;  // floor objects: where in the room
    int room = 0;
    int group = -1;  // semantic group index shared by members placed together
    int wall = -1;   // wall objects: the wall they hang on
    std::optional<Rgb> color;
    std::optional<std::string> material;
    std::map<std::string, std::string> states;
    std::vector<SceneObject> children;  // surface objects, absolute coordinates

    // Top-down footprint from bbox extents (w, d) honoring the 90-degree yaw.
    Rect footprint(double bbox_w, double bbox_d) const {
        const bool swapped = std::abs(std::fmod(rotation, 180.0)) > 45.0;
        const double w = swapped ? bbox_d : bbox_w;
        const double d = swapped ? bbox_w : bbox_d;
        return Rect::from_center({position.x, position.z}, w, d);
    }
};

struct DirectionalLight {
    Vec3 direction;
    Rgb color{255, 255, 255};
    double intensity = 1.0;
};

struct PointLight {
    Vec3 position;
    int room = kExterior;
    std::string object_id;  // lamp-attached lights name their object
    Rgb color{255, 244, 224};
    double intensity = 1.0;
};

struct Lighting {
    DirectionalLight directional;
    std::vector<PointLight> point_lights;
    std::string skybox_id;
    std::string time_of_day;
};

struct StructureMaterials {
    bool walls_same = false;
    bool floors_same = false;
    std::vector<bool> wall_solid;           // per room
    std::vector<std::string> wall_material;  // per room (texture id or "solid")
    std::vector<std::optional<Rgb>> wall_color;
    std::vector<std::string> floor_material;
    std::string ceiling_material;
    std::optional<Rgb> ceiling_color;
};

struct HouseMetadata {
    uint64_t seed = 0;
    std::string room_spec_id;
    Split split = Split::Train;
    int schema_version = kHouseSchemaVersion;
    std::string generator;
    int retries = 0;
};

struct House {
    HouseMetadata metadata;
    std::vector<RoomInfo> rooms;
    std::vector<Wall> walls;
    std::vector<Opening> doors;       // doorway / door_frame / exterior_door
    std::vector<Opening> open_walls;
    std::vector<SceneObject> windows;  // wall objects in the `windows` array
    std::vector<SceneObject> objects;
    Lighting lighting;
    double ceiling_height = 2.5;
    StructureMaterials structure;
    double boundary_width = 0.0;  // scaled boundary extents, meters
    double boundary_depth = 0.0;
    double plan_scale = 1.0;  // meters per pre-scale grid cell

    const RoomInfo* room_by_id(int id) const {
        for (const RoomInfo& r : rooms)
            if (r.id == id) return &r;
        return nullptr;
    }
    const Wall* wall_by_id(int id) const {
        for (const Wall& w : walls)
            if (w.id == id) return &w;
        return nullptr;
    }
    // Visits every object including nested children.
    template <typename F>
    void for_each_object(F&& f) const {
        for (const SceneObject& o : objects) visit_object(o, f);
        for (const SceneObject& o : windows) visit_object(o, f);
    }
    template <typename F>
    void for_each_object_mut(F&& f) {
        for (SceneObject& o : objects) visit_object_mut(o, f);
        for (SceneObject& o : windows) visit_object_mut(o, f);
    }

private:
    template <typename F>
    static void visit_object(const SceneObject& o, F& f) {
        f(o);
        for (const SceneObject& c : o.children) visit_object(c, f);
    }
    template <typename F>
    static void visit_object_mut(SceneObject& o, F& f) {
        f(o);
        for (SceneObject& c : o.children) visit_object_mut(c, f);
    }
};

}  // namespace prochouse
