#pragma once

#include <string>

#include "prochouse/catalog.hpp"
#include "prochouse/layout.hpp"
#include "prochouse/roomspec.hpp"
#include "test_paths.hpp"

namespace helpers {

inline const prochouse::AssetCatalog& shipped_catalog() {
    static prochouse::AssetCatalog catalog =
        prochouse::load_catalog(std::string(kDataDir) + "/catalog.json");
    return catalog;
}

inline const std::vector<prochouse::RoomSpec>& shipped_specs() {
    static std::vector<prochouse::RoomSpec> specs =
        prochouse::load_room_specs(std::string(kDataDir) + "/room_specs.json");
    return specs;
}

// Single rectangular room plan, already scaled, for controlled placement tests.
inline prochouse::FloorPlan one_room_plan(int xs, int zs, double scale,
                                          prochouse::RoomType type = prochouse::RoomType::LivingRoom) {
    prochouse::FloorPlan plan;
    plan.boundary.inside = prochouse::GridMask(xs, zs, true);
    plan.scale = scale;
    prochouse::PlanRoom room;
    room.id = 0;
    room.type = type;
    room.cells = plan.boundary.inside;
    room.cell_count = xs * zs;
    prochouse::trace_simple_ring(room.cells, room.polygon);
    plan.rooms.push_back(std::move(room));
    return plan;
}

// Plan with rooms assigned per cell (row-major owner ids), already scaled.
inline prochouse::FloorPlan plan_from_grid(int xs, int zs, const std::vector<int>& owners,
                                           const std::vector<prochouse::RoomType>& types,
                                           double scale) {
    prochouse::FloorPlan plan;
    plan.boundary.inside = prochouse::GridMask(xs, zs);
    plan.scale = scale;
    for (size_t i = 0; i < types.size(); ++i) {
        prochouse::PlanRoom room;
        room.id = static_cast<int>(i);
        room.type = types[i];
        room.cells = prochouse::GridMask(xs, zs);
        plan.rooms.push_back(std::move(room));
    }
    for (int z = 0; z < zs; ++z)
        for (int x = 0; x < xs; ++x) {
            const int owner = owners[static_cast<size_t>(z) * xs + x];
            if (owner < 0) continue;
            plan.boundary.inside.set(x, z, true);
            plan.rooms[owner].cells.set(x, z, true);
        }
    for (prochouse::PlanRoom& room : plan.rooms) {
        room.cell_count = room.cells.count();
        prochouse::trace_simple_ring(room.cells, room.polygon);
    }
    return plan;
}

// Leaf spec node.
inline prochouse::SpecNode leaf(prochouse::RoomType type, double weight = 1.0,
                                bool avoid = false) {
    prochouse::SpecNode n;
    n.is_leaf = true;
    n.room_type = type;
    n.growth_weight = weight;
    n.avoid_door_to_parent = avoid;
    return n;
}

inline prochouse::SpecNode zone(std::vector<prochouse::SpecNode> children, double weight = 1.0) {
    prochouse::SpecNode n;
    n.is_leaf = false;
    n.growth_weight = weight;
    n.children = std::move(children);
    return n;
}

// Canonical 4-room spec: (bedroom+bathroom) and (kitchen+living room) zones.
inline prochouse::RoomSpec four_room_spec() {
    using prochouse::RoomType;
    prochouse::RoomSpec spec;
    spec.id = "four_room_fixture";
    spec.root = zone({zone({leaf(RoomType::Bedroom, 3), leaf(RoomType::Bathroom, 2, true)}, 2),
                      zone({leaf(RoomType::Kitchen, 2), leaf(RoomType::LivingRoom, 3)}, 3)});
    return spec;
}

}  // namespace helpers
