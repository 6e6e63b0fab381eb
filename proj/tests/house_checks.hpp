#pragma once

// Geometric assertions over emitted houses, shared by unit tests and the
// acceptance suite. Everything here works from the house JSON model plus the
// catalog, independent of generator internals.

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "prochouse/catalog.hpp"
#include "prochouse/house.hpp"

namespace house_checks {

using namespace prochouse;

struct Violations {
    int partition = 0;
    int footprint_overlap = 0;
    int wall_object = 0;
    int surface_child = 0;
    int rotation = 0;
    std::vector<std::string> notes;

    int total() const {
        return partition + footprint_overlap + wall_object + surface_child + rotation;
    }
    void note(const std::string& s) {
        if (notes.size() < 20) notes.push_back(s);
    }
};

inline Rect object_rect(const AssetCatalog& catalog, const SceneObject& o) {
    const AssetInstance* inst = catalog.find_instance(o.asset_id);
    return o.footprint(inst->bbox.x, inst->bbox.z);
}

inline Vec2 facing_dir(double rotation) {
    const int g = static_cast<int>(std::lround(rotation / 90.0)) & 3;
    switch (g) {
        case 0: return {0, 1};
        case 1: return {1, 0};
        case 2: return {0, -1};
        default: return {-1, 0};
    }
}

inline Rect inflate_by_margins(const Rect& r, PlacementZone zone, double rotation,
                               double middle_margin = 0.35, double edge_margin = 0.5) {
    if (zone == PlacementZone::Middle) return r.expanded(middle_margin);
    const Vec2 f = facing_dir(rotation);
    return r.expanded(f.x < 0 ? edge_margin : 0, f.z < 0 ? edge_margin : 0,
                      f.x > 0 ? edge_margin : 0, f.z > 0 ? edge_margin : 0);
}

// True when the segment [a, b] lies on one straight edge of the polygon.
inline bool segment_on_polygon_edge(const Polygon& poly, Vec2 a, Vec2 b, double eps = 1e-4) {
    const size_t n = poly.pts.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2 p = poly.pts[i];
        const Vec2 q = poly.pts[(i + 1) % n];
        if (std::abs(p.x - q.x) < eps && std::abs(a.x - p.x) < eps && std::abs(b.x - p.x) < eps) {
            const double lo = std::min(p.z, q.z), hi = std::max(p.z, q.z);
            if (std::min(a.z, b.z) >= lo - eps && std::max(a.z, b.z) <= hi + eps) return true;
        }
        if (std::abs(p.z - q.z) < eps && std::abs(a.z - p.z) < eps && std::abs(b.z - p.z) < eps) {
            const double lo = std::min(p.x, q.x), hi = std::max(p.x, q.x);
            if (std::min(a.x, b.x) >= lo - eps && std::max(a.x, b.x) <= hi + eps) return true;
        }
    }
    return false;
}

inline bool back_edge_on_boundary(const Rect& fp, double rotation, const Polygon& poly) {
    const Vec2 f = facing_dir(rotation);
    if (f.z > 0) return segment_on_polygon_edge(poly, {fp.x0, fp.z0}, {fp.x1, fp.z0});
    if (f.z < 0) return segment_on_polygon_edge(poly, {fp.x0, fp.z1}, {fp.x1, fp.z1});
    if (f.x > 0) return segment_on_polygon_edge(poly, {fp.x0, fp.z0}, {fp.x0, fp.z1});
    return segment_on_polygon_edge(poly, {fp.x1, fp.z0}, {fp.x1, fp.z1});
}

// Exact partition: on the pre-scale cell grid, every inside cell belongs to
// exactly one room and room polygon areas equal their cell counts.
inline void check_partition(const House& house, Violations& v) {
    const double s = house.plan_scale;
    const int xs = static_cast<int>(std::lround(house.boundary_width / s));
    const int zs = static_cast<int>(std::lround(house.boundary_depth / s));
    std::map<int, int> cells_per_room;
    for (int z = 0; z < zs; ++z) {
        for (int x = 0; x < xs; ++x) {
            const Vec2 c{(x + 0.5) * s, (z + 0.5) * s};
            int owners = 0;
            for (const RoomInfo& room : house.rooms)
                if (room.floor_polygon.contains(c)) {
                    owners++;
                    cells_per_room[room.id]++;
                }
            if (owners > 1) {
                v.partition++;
                v.note("cell owned by several rooms");
            }
        }
    }
    for (const RoomInfo& room : house.rooms) {
        // Vertices are rounded to 1e-6 in the JSON; any real partition defect
        // would be off by at least one full cell (s^2 > 2.5 m^2).
        const double by_cells = cells_per_room[room.id] * s * s;
        if (std::abs(room.floor_polygon.area() - by_cells) > 1e-3) {
            v.partition++;
            v.note("room area does not match its cells");
        }
    }
}

inline void check_floor_footprints(const House& house, const AssetCatalog& catalog,
                                   Violations& v) {
    struct Item {
        Rect inflated;
        Rect raw;
        int room;
    };
    std::vector<Item> items;
    std::map<int, std::vector<const SceneObject*>> groups;
    for (const SceneObject& o : house.objects) {
        if (o.placement == ObjectPlacement::Wall) continue;
        if (o.position.y > 1e-6) continue;
        if (o.group >= 0) {
            groups[o.group].push_back(&o);
            continue;
        }
        const Rect fp = object_rect(catalog, o);
        items.push_back({inflate_by_margins(fp, o.zone, o.rotation), fp, o.room});
        if (!house.rooms[o.room].floor_polygon.contains(fp.center())) {
            v.footprint_overlap++;
            v.note("floor object center outside its room");
        }
    }
    for (const auto& [gid, members] : groups) {
        Rect bb = object_rect(catalog, *members[0]);
        for (const SceneObject* m : members) {
            const Rect r = object_rect(catalog, *m);
            bb.x0 = std::min(bb.x0, r.x0);
            bb.z0 = std::min(bb.z0, r.z0);
            bb.x1 = std::max(bb.x1, r.x1);
            bb.z1 = std::max(bb.z1, r.z1);
        }
        // The group's shared zone and effective facing: take them from the
        // first member whose footprint touches the group box back side.
        const SceneObject* rep = members[0];
        items.push_back({inflate_by_margins(bb, rep->zone, rep->rotation), bb, rep->room});
    }
    for (size_t i = 0; i < items.size(); ++i)
        for (size_t j = i + 1; j < items.size(); ++j)
            if (rects_overlap(items[i].inflated, items[j].inflated, 1e-6)) {
                v.footprint_overlap++;
                v.note("padded floor footprints overlap");
            }
}

inline void check_wall_objects(const House& house, const AssetCatalog& catalog, Violations& v) {
    // Spans group by wall face: objects may hang on both sides of one wall.
    std::map<std::pair<int, int>, std::vector<std::pair<double, double>>> spans;
    auto opening_spans = [&](int wall_id) {
        std::vector<std::pair<double, double>> out;
        const Wall* w = house.wall_by_id(wall_id);
        for (const Opening& op : house.doors)
            if (op.wall == wall_id) out.push_back({w->lo + op.offset, w->lo + op.offset + op.width});
        for (const Opening& op : house.open_walls)
            if (op.wall == wall_id) out.push_back({w->lo + op.offset, w->lo + op.offset + op.width});
        return out;
    };
    auto handle = [&](const SceneObject& o, bool must_be_exterior) {
        const Wall* w = house.wall_by_id(o.wall);
        if (!w) {
            v.wall_object++;
            v.note("wall object references a missing wall");
            return;
        }
        if (must_be_exterior && w->room_neg != kExterior && w->room_pos != kExterior) {
            v.wall_object++;
            v.note("window on an interior wall");
        }
        const AssetInstance* inst = catalog.find_instance(o.asset_id);
        const double lo = (w->axis == 'x' ? o.position.x : o.position.z) - inst->bbox.x / 2;
        const double hi = lo + inst->bbox.x;
        if (lo < w->lo - 1e-6 || hi > w->hi + 1e-6) {
            v.wall_object++;
            v.note("wall object sticks out of its wall");
        }
        for (const auto& [slo, shi] : opening_spans(o.wall))
            if (lo < shi - 1e-6 && slo < hi - 1e-6) {
                v.wall_object++;
                v.note("wall object overlaps a door span");
            }
        for (const auto& [plo, phi] : spans[{o.wall, o.room}])
            if (lo < phi - 1e-6 && plo < hi - 1e-6) {
                v.wall_object++;
                v.note("wall objects overlap each other");
            }
        spans[{o.wall, o.room}].push_back({lo, hi});
        if (o.position.y < -1e-6 || o.position.y + inst->bbox.y > house.ceiling_height + 1e-6) {
            v.wall_object++;
            v.note("wall object outside the vertical range");
        }
    };
    for (const SceneObject& o : house.windows) handle(o, true);
    for (const SceneObject& o : house.objects)
        if (o.placement == ObjectPlacement::Wall) handle(o, false);
}

inline void check_surface_children(const House& house, const AssetCatalog& catalog,
                                   Violations& v) {
    auto walk = [&](const SceneObject& parent, auto&& self) -> void {
        const AssetInstance* pinst = catalog.find_instance(parent.asset_id);
        const Rect top = parent.footprint(pinst->bbox.x, pinst->bbox.z);
        const double top_y = parent.position.y + pinst->bbox.y;
        std::vector<Rect> sibling_rects;
        for (const SceneObject& c : parent.children) {
            const Rect fp = object_rect(catalog, c);
            if (!top.contains_rect(fp, 1e-6)) {
                v.surface_child++;
                v.note("surface child outside the receptacle top face: " + c.id);
            }
            if (std::abs(c.position.y - top_y) > 1e-6) {
                v.surface_child++;
                v.note("surface child not resting on the top face: " + c.id);
            }
            for (const Rect& other : sibling_rects)
                if (rects_overlap(fp, other, 1e-6)) {
                    v.surface_child++;
                    v.note("surface children overlap");
                }
            sibling_rects.push_back(fp);
            self(c, self);
        }
    };
    for (const SceneObject& o : house.objects) walk(o, walk);
}

inline void check_rotations(const House& house, const AssetCatalog& catalog, Violations& v) {
    std::map<int, std::vector<const SceneObject*>> groups;
    for (const SceneObject& o : house.objects) {
        if (o.placement == ObjectPlacement::Wall) continue;
        const double frac = std::abs(std::fmod(o.rotation, 90.0));
        if (frac > 1e-6 && frac < 90.0 - 1e-6) {
            v.rotation++;
            v.note("floor rotation not a multiple of 90");
        }
        if (o.group >= 0 && o.position.y < 1e-6) {
            groups[o.group].push_back(&o);
            continue;
        }
        if (o.placement != ObjectPlacement::Floor) continue;
        if (o.zone == PlacementZone::Middle) continue;
        const Rect fp = object_rect(catalog, o);
        if (!back_edge_on_boundary(fp, o.rotation, house.rooms[o.room].floor_polygon)) {
            v.rotation++;
            v.note("edge/corner object back not on a wall: " + o.id);
        }
    }
    for (const auto& [gid, members] : groups) {
        if (members[0]->zone == PlacementZone::Middle) continue;
        Rect bb = object_rect(catalog, *members[0]);
        for (const SceneObject* m : members) {
            const Rect r = object_rect(catalog, *m);
            bb.x0 = std::min(bb.x0, r.x0);
            bb.z0 = std::min(bb.z0, r.z0);
            bb.x1 = std::max(bb.x1, r.x1);
            bb.z1 = std::max(bb.z1, r.z1);
        }
        // The group as a whole backs onto the wall; individual members need not.
        bool on_wall = false;
        for (double rot : {0.0, 90.0, 180.0, 270.0})
            if (back_edge_on_boundary(bb, rot, house.rooms[members[0]->room].floor_polygon))
                on_wall = true;
        if (!on_wall) {
            v.rotation++;
            v.note("edge/corner group does not touch a wall");
        }
    }
}

inline void check_openings(const House& house, Violations& v) {
    std::map<std::pair<int, int>, int> per_pair;
    int exterior_doors = 0;
    auto handle = [&](const Opening& op) {
        const Wall* w = house.wall_by_id(op.wall);
        if (!w) {
            v.wall_object++;
            v.note("opening references a missing wall");
            return;
        }
        // Offsets, widths, and wall ends each round to 1e-6 in the JSON.
        if (op.offset < -3e-6 || op.offset + op.width > w->length() + 3e-6) {
            v.wall_object++;
            v.note("opening sticks out of its wall");
        }
        if (op.kind == OpeningKind::ExteriorDoor) {
            exterior_doors++;
            if (op.room_b != kExterior) {
                v.wall_object++;
                v.note("exterior door not touching the exterior");
            }
        } else {
            per_pair[{std::min(op.room_a, op.room_b), std::max(op.room_a, op.room_b)}]++;
        }
    };
    for (const Opening& op : house.doors) handle(op);
    for (const Opening& op : house.open_walls) handle(op);
    for (const auto& [pair, count] : per_pair)
        if (count > 1) {
            v.wall_object++;
            v.note("several openings between one room pair");
        }
    if (exterior_doors != 1) {
        v.wall_object++;
        v.note("house does not have exactly one exterior door");
    }
}

inline Violations check_house_geometry(const House& house, const AssetCatalog& catalog) {
    Violations v;
    check_partition(house, v);
    check_floor_footprints(house, catalog, v);
    check_wall_objects(house, catalog, v);
    check_surface_children(house, catalog, v);
    check_rotations(house, catalog, v);
    check_openings(house, v);
    return v;
}

}  // namespace house_checks
