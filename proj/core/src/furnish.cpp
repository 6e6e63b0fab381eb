#include "prochouse/furnish.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace prochouse {

namespace {

constexpr double kEps = 1e-7;

// ---- rotation helpers (yaw clockwise from above; 0 faces +z) ----

Vec2 rotate_quarters(Vec2 p, int g) {
    switch (g & 3) {
        case 0: return p;
        case 1: return {p.z, -p.x};
        case 2: return {-p.x, -p.z};
        default: return {-p.z, p.x};
    }
}

Rect rotate_rect(const Rect& r, int g) {
    const Vec2 a = rotate_quarters({r.x0, r.z0}, g);
    const Vec2 b = rotate_quarters({r.x1, r.z1}, g);
    return {std::min(a.x, b.x), std::min(a.z, b.z), std::max(a.x, b.x), std::max(a.z, b.z)};
}

std::pair<double, double> extents_rotated(double w, double d, int g) {
    return (g & 1) ? std::pair{d, w} : std::pair{w, d};
}

Vec2 facing_of(int g) {
    switch (g & 3) {
        case 0: return {0, 1};
        case 1: return {1, 0};
        case 2: return {0, -1};
        default: return {-1, 0};
    }
}

}  // namespace

// ---- open area decomposition ----

std::vector<Rect> decompose_open_area(const OpenArea& area) {
    if (area.outer.pts.empty()) return {};
    std::vector<double> xs, zs;
    for (const Vec2& p : area.outer.pts) {
        xs.push_back(p.x);
        zs.push_back(p.z);
    }
    const Rect bb = area.outer.bbox();
    for (const Rect& h : area.holes) {
        for (double v : {h.x0, h.x1})
            if (v > bb.x0 + kEps && v < bb.x1 - kEps) xs.push_back(v);
        for (double v : {h.z0, h.z1})
            if (v > bb.z0 + kEps && v < bb.z1 - kEps) zs.push_back(v);
    }
    auto dedupe = [](std::vector<double>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end(), [](double a, double b) { return std::abs(a - b) < kEps; }),
                v.end());
    };
    dedupe(xs);
    dedupe(zs);
    const int cols = static_cast<int>(xs.size()) - 1;
    const int rows = static_cast<int>(zs.size()) - 1;
    if (cols <= 0 || rows <= 0) return {};

    std::vector<uint8_t> inside(static_cast<size_t>(cols) * rows, 0);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const Vec2 center{(xs[c] + xs[c + 1]) / 2, (zs[r] + zs[r + 1]) / 2};
            if (!area.outer.contains(center)) continue;
            bool holed = false;
            for (const Rect& h : area.holes)
                if (h.contains(center, -kEps)) holed = true;
            if (!holed) inside[static_cast<size_t>(r) * cols + c] = 1;
        }
    }
    auto at = [&](int r, int c) { return inside[static_cast<size_t>(r) * cols + c] != 0; };

    // Histogram sweep: every maximal rectangle pops exactly once at its bottom
    // row; vertical maximality downward is the only check left.
    std::vector<Rect> out;
    std::vector<int> height(cols, 0);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) height[c] = at(r, c) ? height[c] + 1 : 0;
        std::vector<std::pair<int, int>> stack;  // (start col, height)
        for (int c = 0; c <= cols; ++c) {
            const int h = c < cols ? height[c] : 0;
            int start = c;
            while (!stack.empty() && stack.back().second > h) {
                const auto [s, hh] = stack.back();
                stack.pop_back();
                bool extends_down = r + 1 < rows;
                for (int cc = s; extends_down && cc < c; ++cc)
                    if (!at(r + 1, cc)) extends_down = false;
                if (!extends_down) out.push_back({xs[s], zs[r + 1 - hh], xs[c], zs[r + 1]});
                start = s;
            }
            if (h > 0 && (stack.empty() || stack.back().second < h)) stack.push_back({start, h});
        }
    }

    auto is_dead = [&](const Rect& r) {
        for (const Rect& d : area.dead_rects)
            if (std::abs(d.x0 - r.x0) < kEps && std::abs(d.z0 - r.z0) < kEps &&
                std::abs(d.x1 - r.x1) < kEps && std::abs(d.z1 - r.z1) < kEps)
                return true;
        return false;
    };
    out.erase(std::remove_if(out.begin(), out.end(), is_dead), out.end());
    std::sort(out.begin(), out.end(), [](const Rect& a, const Rect& b) {
        if (std::abs(a.area() - b.area()) > kEps) return a.area() > b.area();
        if (std::abs(a.x0 - b.x0) > kEps) return a.x0 < b.x0;
        return a.z0 < b.z0;
    });
    return out;
}

// ---- distribution samplers ----

int sample_iteration_budget(Rng& rng) {
    const double u = rng.uniform() * 200.0;
    if (u < 1) return 1;
    if (u < 3) return 4;
    if (u < 7) return 5;
    if (u < 27) return 6;
    return 7;
}

int sample_window_budget(Rng& rng) {
    const double u = rng.uniform();
    if (u < 0.125) return 0;
    if (u < 0.5) return 1;
    return 2;
}

int sample_painting_budget(Rng& rng) {
    const double u = rng.uniform();
    if (u < 0.05) return 0;
    if (u < 0.15) return 1;
    if (u < 0.65) return 2;
    if (u < 0.9) return 3;
    return 4;
}

double sample_house_bias(const FurnishParams& params, Rng& rng) {
    return (params.b_house_max - params.b_house_min) *
               rng.beta(params.b_house_alpha, params.b_house_beta) +
           params.b_house_min;
}

// ---- opening clearances ----

std::vector<Rect> opening_clearances(int room_id, const std::vector<Wall>& walls,
                                     const std::vector<Opening>& openings,
                                     const FurnishParams& params) {
    std::vector<Rect> out;
    for (const Opening& op : openings) {
        const Wall* w = nullptr;
        for (const Wall& cand : walls)
            if (cand.id == op.wall) w = &cand;
        if (!w || !w->touches(room_id)) continue;
        if (op.kind == OpeningKind::Doorway && op.open_into == room_id) {
            if (auto swing = op.swing_rect(*w)) out.push_back(*swing);
        }
        if (!op.passable() || op.kind == OpeningKind::OpenWall) continue;
        // Keep a thin walkway strip on this room's side of the span.
        const double c = params.opening_clearance;
        const bool room_on_pos = w->room_pos == room_id;
        if (w->axis == 'x') {
            const double z0 = room_on_pos ? w->coord : w->coord - c;
            out.push_back({w->lo + op.offset, z0, w->lo + op.offset + op.width, z0 + c});
        } else {
            const double x0 = room_on_pos ? w->coord : w->coord - c;
            out.push_back({x0, w->lo + op.offset, x0 + c, w->lo + op.offset + op.width});
        }
    }
    return out;
}

// ---- rect classification against the room polygon ----

namespace {

struct CornerSpot {
    Vec2 p;
    double run_x = 0;  // wall length from the corner into the rect, along x
    double run_z = 0;
};

struct RectSpot {
    std::vector<CornerSpot> corners;  // rect corners sitting on convex room corners
    std::vector<int> wall_sides;      // 0 z0-side, 1 x1-side, 2 z1-side, 3 x0-side
};

bool side_on_polygon(const Polygon& poly, Vec2 a, Vec2 b) {
    for (size_t i = 0; i < poly.pts.size(); ++i) {
        const Vec2 p = poly.pts[i];
        const Vec2 q = poly.pts[(i + 1) % poly.pts.size()];
        if (std::abs(p.x - q.x) < kEps && std::abs(a.x - p.x) < kEps && std::abs(b.x - p.x) < kEps) {
            const double lo = std::min(p.z, q.z), hi = std::max(p.z, q.z);
            if (std::min(a.z, b.z) >= lo - kEps && std::max(a.z, b.z) <= hi + kEps) return true;
        }
        if (std::abs(p.z - q.z) < kEps && std::abs(a.z - p.z) < kEps && std::abs(b.z - p.z) < kEps) {
            const double lo = std::min(p.x, q.x), hi = std::max(p.x, q.x);
            if (std::min(a.x, b.x) >= lo - kEps && std::max(a.x, b.x) <= hi + kEps) return true;
        }
    }
    return false;
}

RectSpot classify_rect(const Rect& r, const Polygon& poly) {
    RectSpot spot;
    const size_t n = poly.pts.size();
    for (const Vec2 corner : {Vec2{r.x0, r.z0}, Vec2{r.x1, r.z0}, Vec2{r.x1, r.z1}, Vec2{r.x0, r.z1}}) {
        const double dx = std::abs(corner.x - r.x0) < kEps ? 1.0 : -1.0;
        const double dz = std::abs(corner.z - r.z0) < kEps ? 1.0 : -1.0;
        for (size_t i = 0; i < n; ++i) {
            const Vec2 prev = poly.pts[(i + n - 1) % n];
            const Vec2 v = poly.pts[i];
            const Vec2 next = poly.pts[(i + 1) % n];
            if (distance(corner, v) > kEps) continue;
            if (cross(v - prev, next - v) <= 0) continue;  // concave for CCW rings
            // Wall runs from the corner into the rect: objects backed onto a
            // wall may not extend past where that wall ends.
            CornerSpot cs;
            cs.p = corner;
            for (const Vec2 other : {prev, next}) {
                const Vec2 d = other - v;
                if (std::abs(d.z) < kEps && d.x * dx > 0) cs.run_x = std::abs(d.x);
                if (std::abs(d.x) < kEps && d.z * dz > 0) cs.run_z = std::abs(d.z);
            }
            spot.corners.push_back(cs);
        }
    }
    if (side_on_polygon(poly, {r.x0, r.z0}, {r.x1, r.z0})) spot.wall_sides.push_back(0);
    if (side_on_polygon(poly, {r.x1, r.z0}, {r.x1, r.z1})) spot.wall_sides.push_back(1);
    if (side_on_polygon(poly, {r.x0, r.z1}, {r.x1, r.z1})) spot.wall_sides.push_back(2);
    if (side_on_polygon(poly, {r.x0, r.z0}, {r.x0, r.z1})) spot.wall_sides.push_back(3);
    return spot;
}

// Orientation whose back rests on the given rect side.
int orientation_for_side(int side) {
    switch (side) {
        case 0: return 0;  // south wall, face +z
        case 1: return 3;  // east wall, face -x
        case 2: return 2;  // north wall, face -z
        default: return 1;  // west wall, face +x
    }
}

struct Pose {
    Rect footprint;
    Rect hole;
    int g = 0;  // quarter turns
};

// Computes footprint + subtraction hole for an object of raw extents (w, d)
// dropped into `rect` at the given spot kind.
std::optional<Pose> pose_in_rect(const Rect& rect, double w, double d, PlacementZone zone,
                                 const RectSpot& spot, const FurnishParams& params, Rng& rng) {
    if (zone == PlacementZone::Corner) {
        const CornerSpot& corner_spot = spot.corners[static_cast<size_t>(
            rng.uniform_int(0, static_cast<int64_t>(spot.corners.size()) - 1))];
        const Vec2 corner = corner_spot.p;
        const double dx = std::abs(corner.x - rect.x0) < kEps ? 1.0 : -1.0;
        const double dz = std::abs(corner.z - rect.z0) < kEps ? 1.0 : -1.0;
        // Back against the x-running wall (facing vertically) or the z-running
        // wall (facing horizontally). The back edge must stay on that wall.
        const int g_vert = dz > 0 ? 0 : 2;
        const int g_horz = dx > 0 ? 1 : 3;
        std::vector<int> feasible;
        for (int g : {g_vert, g_horz}) {
            const auto [ew, ed] = extents_rotated(w, d, g);
            if (ew + params.edge_margin > rect.width() + kEps ||
                ed + params.edge_margin > rect.depth() + kEps)
                continue;
            const double back_run = g == g_vert ? corner_spot.run_x : corner_spot.run_z;
            const double back_extent = g == g_vert ? ew : ed;
            if (back_extent > back_run + kEps) continue;
            feasible.push_back(g);
        }
        if (feasible.empty()) return std::nullopt;
        const int g = feasible[static_cast<size_t>(
            rng.uniform_int(0, static_cast<int64_t>(feasible.size()) - 1))];
        const auto [ew, ed] = extents_rotated(w, d, g);
        const double x0 = dx > 0 ? corner.x : corner.x - ew;
        const double z0 = dz > 0 ? corner.z : corner.z - ed;
        Pose pose;
        pose.g = g;
        pose.footprint = {x0, z0, x0 + ew, z0 + ed};
        const Vec2 f = facing_of(g);
        pose.hole = pose.footprint.expanded(f.x < 0 ? params.edge_margin : 0,
                                            f.z < 0 ? params.edge_margin : 0,
                                            f.x > 0 ? params.edge_margin : 0,
                                            f.z > 0 ? params.edge_margin : 0);
        return pose;
    }
    if (zone == PlacementZone::Edge) {
        const int side = spot.wall_sides[static_cast<size_t>(
            rng.uniform_int(0, static_cast<int64_t>(spot.wall_sides.size()) - 1))];
        const int g = orientation_for_side(side);
        const auto [ew, ed] = extents_rotated(w, d, g);
        if (ew + params.edge_margin > rect.width() + kEps ||
            ed + params.edge_margin > rect.depth() + kEps)
            return std::nullopt;
        Pose pose;
        pose.g = g;
        if (side == 0 || side == 2) {
            if (ew > rect.width() + kEps) return std::nullopt;
            const double x0 = rng.uniform_real(rect.x0, rect.x1 - ew);
            const double z0 = side == 0 ? rect.z0 : rect.z1 - ed;
            pose.footprint = {x0, z0, x0 + ew, z0 + ed};
        } else {
            if (ed > rect.depth() + kEps) return std::nullopt;
            const double z0 = rng.uniform_real(rect.z0, rect.z1 - ed);
            const double x0 = side == 3 ? rect.x0 : rect.x1 - ew;
            pose.footprint = {x0, z0, x0 + ew, z0 + ed};
        }
        const Vec2 f = facing_of(g);
        pose.hole = pose.footprint.expanded(f.x < 0 ? params.edge_margin : 0,
                                            f.z < 0 ? params.edge_margin : 0,
                                            f.x > 0 ? params.edge_margin : 0,
                                            f.z > 0 ? params.edge_margin : 0);
        return pose;
    }
    // Middle: any quarter turn whose padded box fits.
    std::vector<int> feasible;
    const double m2 = 2 * params.middle_margin;
    for (int g = 0; g < 4; ++g) {
        const auto [ew, ed] = extents_rotated(w, d, g);
        if (ew + m2 <= rect.width() + kEps && ed + m2 <= rect.depth() + kEps) feasible.push_back(g);
    }
    if (feasible.empty()) return std::nullopt;
    const int g = feasible[static_cast<size_t>(
        rng.uniform_int(0, static_cast<int64_t>(feasible.size()) - 1))];
    const auto [ew, ed] = extents_rotated(w, d, g);
    const double x0 = rng.uniform_real(rect.x0 + params.middle_margin,
                                       rect.x1 - params.middle_margin - ew);
    const double z0 = rng.uniform_real(rect.z0 + params.middle_margin,
                                       rect.z1 - params.middle_margin - ed);
    Pose pose;
    pose.g = g;
    pose.footprint = {x0, z0, x0 + ew, z0 + ed};
    pose.hole = pose.footprint.expanded(params.middle_margin);
    return pose;
}

double zone_pad(PlacementZone zone, const FurnishParams& params) {
    return zone == PlacementZone::Middle ? 2 * params.middle_margin : params.edge_margin;
}

}  // namespace

// ---- floor placement ----

std::vector<SceneObject> place_floor_objects(const FloorPlan& plan, int room_id,
                                             const std::vector<Wall>& walls,
                                             const std::vector<Opening>& openings,
                                             const AssetCatalog& catalog, Split split,
                                             const FurnishParams& params, IdGen& ids, Rng& rng) {
    const PlanRoom& room = plan.rooms[room_id];
    const RoomType room_type = room.type;

    OpenArea area;
    area.outer = room.polygon.scaled(plan.scale);
    for (const Rect& r : opening_clearances(room_id, walls, openings, params)) area.subtract(r);

    std::vector<SceneObject> placed;
    std::map<std::string, int> type_counts;

    auto type_allowed = [&](const AssetType& t) {
        return t.allow_duplicates_in_room || type_counts[t.name] == 0;
    };

    const int budget = sample_iteration_budget(rng);
    for (int iteration = 0; iteration < budget; ++iteration) {
        const std::vector<Rect> rects = decompose_open_area(area);
        if (rects.empty()) break;
        const Rect rect = [&] {
            if (rng.bernoulli(params.p_largest_rect)) return rects[0];
            std::vector<double> weights;
            for (const Rect& r : rects) weights.push_back(r.area());
            return rects[rng.pick_weighted(weights)];
        }();

        const RectSpot spot = classify_rect(rect, area.outer);
        PlacementZone zone = PlacementZone::Middle;
        if (!spot.corners.empty()) {
            zone = PlacementZone::Corner;
        } else if (!spot.wall_sides.empty()) {
            zone = rng.bernoulli(params.p_edge) ? PlacementZone::Edge : PlacementZone::Middle;
        }

        const double pad = zone_pad(zone, params);

        // Groups that could work here, weighted by room weight.
        std::vector<const SagDef*> sag_pool;
        std::vector<double> sag_weights;
        for (const SagDef& def : catalog.sags) {
            if (def.room_weight(room_type) <= 0 || !def.supports(zone)) continue;
            bool dup_blocked = false;
            for (const AssetSampler& s : def.samplers) {
                const AssetType* t = catalog.find_type(s.asset_type);
                if (t && !type_allowed(*t)) dup_blocked = true;
            }
            if (dup_blocked) continue;
            sag_pool.push_back(&def);
            sag_weights.push_back(static_cast<double>(def.room_weight(room_type)));
        }

        // Singleton candidates grouped by type.
        const auto instances =
            catalog.filter_floor_assets(room_type, zone, split, rect.width(), rect.depth(), pad);
        std::map<std::string, std::vector<const AssetInstance*>> by_type;
        for (const AssetInstance* inst : instances) {
            const AssetType* t = catalog.find_type(inst->asset_type);
            if (t && type_allowed(*t)) by_type[inst->asset_type].push_back(inst);
        }

        bool placed_something = false;
        const bool try_sag =
            !sag_pool.empty() && (by_type.empty() || rng.bernoulli(params.sag_preference));

        if (try_sag) {
            const SagDef* def = sag_pool[rng.pick_weighted(sag_weights)];
            if (auto group = instantiate_sag(*def, catalog, split, rng)) {
                const double gw = group->footprint.width();
                const double gd = group->footprint.depth();
                if (fits_with_pad(gw, gd, rect.width(), rect.depth(), pad)) {
                    if (auto pose = pose_in_rect(rect, gw, gd, zone, spot, params, rng)) {
                        // Map members into the room: rotate about the group
                        // origin, then shift the rotated footprint onto the pose.
                        const Rect rotated = rotate_rect(group->footprint, pose->g);
                        const Vec2 shift{pose->footprint.x0 - rotated.x0,
                                         pose->footprint.z0 - rotated.z0};
                        const int group_id = ids.next_group++;
                        std::map<std::string, size_t> top_index;
                        for (const PlacedMember& m : group->members) {
                            SceneObject obj;
                            obj.id = ids.object_id();
                            obj.asset_id = m.instance->id;
                            obj.asset_type = m.instance->asset_type;
                            const Vec2 c = rotate_quarters(m.center, pose->g) + shift;
                            obj.position = {c.x, m.y, c.z};
                            obj.rotation = std::fmod(m.rotation + 90.0 * pose->g, 360.0);
                            obj.placement = ObjectPlacement::SagMember;
                            obj.zone = zone;
                            obj.room = room_id;
                            obj.group = group_id;
                            type_counts[obj.asset_type]++;
                            if (m.y > kEps) {
                                // Members resting on a parent nest under it.
                                const SagEdge* e = nullptr;
                                for (const SagEdge& cand : def->edges)
                                    if (cand.child == m.sampler_id) e = &cand;
                                bool nested = false;
                                if (e) {
                                    auto it = top_index.find(e->parent);
                                    if (it != top_index.end()) {
                                        placed[it->second].children.push_back(obj);
                                        nested = true;
                                    }
                                }
                                if (!nested) placed.push_back(obj);
                            } else {
                                top_index[m.sampler_id] = placed.size();
                                placed.push_back(obj);
                            }
                        }
                        area.subtract(pose->hole);
                        placed_something = true;
                    }
                }
            }
        }

        if (!placed_something && !by_type.empty()) {
            std::vector<std::string> type_names;
            std::vector<double> type_weights;
            for (const auto& [name, list] : by_type) {
                const AssetType* t = catalog.find_type(name);
                type_names.push_back(name);
                type_weights.push_back(static_cast<double>(t->room_weight(room_type)));
            }
            const std::string& chosen = type_names[rng.pick_weighted(type_weights)];
            const AssetInstance* inst = rng.pick(by_type[chosen]);
            if (auto pose = pose_in_rect(rect, inst->bbox.x, inst->bbox.z, zone, spot, params, rng)) {
                SceneObject obj;
                obj.id = ids.object_id();
                obj.asset_id = inst->id;
                obj.asset_type = inst->asset_type;
                const Vec2 c = pose->footprint.center();
                obj.position = {c.x, 0.0, c.z};
                obj.rotation = 90.0 * pose->g;
                obj.placement = ObjectPlacement::Floor;
                obj.zone = zone;
                obj.room = room_id;
                placed.push_back(obj);
                type_counts[chosen]++;
                area.subtract(pose->hole);
                placed_something = true;
            }
        }

        if (!placed_something) area.kill_rect(rect);
    }
    return placed;
}

// ---- wall objects ----

namespace {

struct WallInterval {
    double lo, hi;
    double height;  // top of the floor object fronting this stretch
};

struct FreeSegment {
    double lo, hi;
    double min_y;  // paintings hang above this
};

// Free stretches of the wall after removing opening spans, blocking objects,
// and spans already used by wall objects.
std::vector<FreeSegment> free_wall_segments(const Wall& wall, int room_id,
                                            const std::vector<SceneObject>& floor_objects,
                                            const std::vector<SceneObject>& wall_objects,
                                            const std::vector<Opening>& openings,
                                            const AssetCatalog& catalog, double block_height) {
    std::vector<std::pair<double, double>> blocked;
    std::vector<WallInterval> under;  // short objects a painting may hang above

    for (const Opening& op : openings)
        if (op.wall == wall.id)
            blocked.push_back({wall.lo + op.offset, wall.lo + op.offset + op.width});

    auto add_object = [&](const SceneObject& o) {
        const AssetInstance* inst = catalog.find_instance(o.asset_id);
        if (!inst) return;
        if (o.placement == ObjectPlacement::Wall) {
            if (o.wall != wall.id) return;
            const Rect fp = o.footprint(inst->bbox.x, inst->bbox.z);
            const double lo = wall.axis == 'x' ? fp.x0 : fp.z0;
            const double hi = wall.axis == 'x' ? fp.x1 : fp.z1;
            blocked.push_back({lo, hi});
            return;
        }
        if (o.room != room_id || o.position.y > kEps) return;
        const Rect fp = o.footprint(inst->bbox.x, inst->bbox.z);
        const bool touches = wall.axis == 'x'
                                 ? std::abs(fp.z0 - wall.coord) < 1e-4 || std::abs(fp.z1 - wall.coord) < 1e-4
                                 : std::abs(fp.x0 - wall.coord) < 1e-4 || std::abs(fp.x1 - wall.coord) < 1e-4;
        if (!touches) return;
        const double lo = std::max(wall.lo, wall.axis == 'x' ? fp.x0 : fp.z0);
        const double hi = std::min(wall.hi, wall.axis == 'x' ? fp.x1 : fp.z1);
        if (hi - lo < kEps) return;
        const double top = o.position.y + inst->bbox.y;
        if (top > block_height)
            blocked.push_back({lo, hi});
        else
            under.push_back({lo, hi, top});
    };
    for (const SceneObject& o : floor_objects) {
        add_object(o);
        for (const SceneObject& c : o.children) add_object(c);
    }
    for (const SceneObject& o : wall_objects) add_object(o);

    std::sort(blocked.begin(), blocked.end());
    std::vector<FreeSegment> out;
    double cursor = wall.lo;
    auto flush = [&](double upto) {
        if (upto - cursor > kEps) {
            FreeSegment seg{cursor, upto, 0.0};
            for (const WallInterval& u : under)
                if (u.lo < seg.hi - kEps && u.hi > seg.lo + kEps) seg.min_y = std::max(seg.min_y, u.height);
            out.push_back(seg);
        }
    };
    for (const auto& [lo, hi] : blocked) {
        flush(std::min(lo, wall.hi));
        cursor = std::max(cursor, hi);
        if (cursor >= wall.hi) break;
    }
    flush(wall.hi);
    return out;
}

SceneObject make_wall_object(const Wall& wall, int room_id, const AssetInstance* inst,
                             double along_lo, double bottom_y, IdGen& ids) {
    SceneObject obj;
    obj.id = ids.object_id();
    obj.asset_id = inst->id;
    obj.asset_type = inst->asset_type;
    obj.placement = ObjectPlacement::Wall;
    obj.room = room_id;
    obj.wall = wall.id;
    const bool room_on_pos = wall.room_pos == room_id;
    const double depth_off = inst->bbox.z / 2 * (room_on_pos ? 1.0 : -1.0);
    if (wall.axis == 'x') {
        obj.position = {along_lo + inst->bbox.x / 2, bottom_y, wall.coord + depth_off};
        obj.rotation = room_on_pos ? 0.0 : 180.0;
    } else {
        obj.position = {wall.coord + depth_off, bottom_y, along_lo + inst->bbox.x / 2};
        obj.rotation = room_on_pos ? 90.0 : 270.0;
    }
    return obj;
}

}  // namespace

std::vector<SceneObject> place_windows(const FloorPlan& plan, int room_id,
                                       const std::vector<Wall>& walls,
                                       const std::vector<Opening>& openings,
                                       const std::vector<SceneObject>& floor_objects,
                                       const AssetCatalog& catalog, Split split,
                                       double ceiling_height, const FurnishParams& params,
                                       IdGen& ids, Rng& rng) {
    std::vector<SceneObject> out;
    const RoomType type = plan.rooms[room_id].type;
    if (type == RoomType::Bathroom) return out;

    const double w_max = std::min(params.wall_object_max_y, ceiling_height);
    const auto pool = catalog.wall_assets("window", split);
    double min_window = 1e300;
    for (const AssetInstance* w : pool) min_window = std::min(min_window, w->bbox.x);
    if (pool.empty()) return out;

    const int budget = sample_window_budget(rng);
    std::set<int> used_walls;

    for (int i = 0; i < budget; ++i) {
        struct Candidate {
            const Wall* wall;
            FreeSegment seg;
        };
        std::vector<Candidate> segments;
        std::vector<double> weights;
        for (const Wall& wall : walls) {
            if (!wall.touches(room_id) || wall.other_room(room_id) != kExterior) continue;
            if (used_walls.count(wall.id)) continue;
            for (const FreeSegment& seg :
                 free_wall_segments(wall, room_id, floor_objects, out, openings, catalog, 0.0)) {
                if (seg.hi - seg.lo < min_window) continue;
                segments.push_back({&wall, seg});
                weights.push_back(seg.hi - seg.lo);
            }
        }
        if (segments.empty()) break;
        const Candidate& pick = segments[rng.pick_weighted(weights)];

        std::vector<const AssetInstance*> fitting;
        for (const AssetInstance* w : pool)
            if (w->bbox.x <= pick.seg.hi - pick.seg.lo && w->bbox.y <= w_max) fitting.push_back(w);
        if (fitting.empty()) continue;
        const AssetInstance* window = rng.pick(fitting);
        const double along = rng.uniform_real(pick.seg.lo, pick.seg.hi - window->bbox.x);
        // Vertically centered between the floor and w_max.
        const double bottom = w_max / 2 - window->bbox.y / 2;
        out.push_back(make_wall_object(*pick.wall, room_id, window, along, bottom, ids));
        used_walls.insert(pick.wall->id);
    }
    return out;
}

namespace {

// Painting-style placement shared by paintings and wall televisions.
std::optional<SceneObject> place_on_free_segment(int room_id, const std::vector<Wall>& walls,
                                                 const std::vector<Opening>& openings,
                                                 const std::vector<SceneObject>& floor_objects,
                                                 const std::vector<SceneObject>& wall_objects,
                                                 const std::vector<const AssetInstance*>& pool,
                                                 const AssetCatalog& catalog,
                                                 double ceiling_height,
                                                 const FurnishParams& params, IdGen& ids,
                                                 Rng& rng) {
    const double w_max = std::min(params.wall_object_max_y, ceiling_height);
    double min_width = 1e300;
    for (const AssetInstance* p : pool) min_width = std::min(min_width, p->bbox.x);
    if (pool.empty()) return std::nullopt;

    struct Candidate {
        const Wall* wall;
        FreeSegment seg;
    };
    std::vector<Candidate> segments;
    std::vector<double> weights;
    for (const Wall& wall : walls) {
        if (!wall.touches(room_id)) continue;
        for (const FreeSegment& seg :
             free_wall_segments(wall, room_id, floor_objects, wall_objects, openings, catalog,
                                params.painting_block_height)) {
            if (seg.hi - seg.lo < min_width) continue;
            segments.push_back({&wall, seg});
            weights.push_back(seg.hi - seg.lo);
        }
    }
    if (segments.empty()) return std::nullopt;
    const Candidate& pick = segments[rng.pick_weighted(weights)];
    const double w_min = pick.seg.min_y;

    std::vector<const AssetInstance*> fitting;
    for (const AssetInstance* p : pool)
        if (p->bbox.x <= pick.seg.hi - pick.seg.lo && p->bbox.y <= w_max - w_min) fitting.push_back(p);
    if (fitting.empty()) return std::nullopt;
    const AssetInstance* inst = rng.pick(fitting);
    const double along = rng.uniform_real(pick.seg.lo, pick.seg.hi - inst->bbox.x);
    const double center_raw = w_min + (w_max - w_min) * rng.beta(12.0, 12.0);
    const double center = std::clamp(center_raw, w_min + inst->bbox.y / 2, w_max - inst->bbox.y / 2);
    return make_wall_object(*pick.wall, room_id, inst, along, center - inst->bbox.y / 2, ids);
}

}  // namespace

std::vector<SceneObject> place_paintings(const FloorPlan& plan, int room_id,
                                         const std::vector<Wall>& walls,
                                         const std::vector<Opening>& openings,
                                         const std::vector<SceneObject>& floor_objects,
                                         const std::vector<SceneObject>& prior_wall_objects,
                                         const AssetCatalog& catalog, Split split,
                                         double ceiling_height, const FurnishParams& params,
                                         IdGen& ids, Rng& rng) {
    (void)plan;
    std::vector<SceneObject> out;
    const auto pool = catalog.wall_assets("painting", split);
    const int budget = sample_painting_budget(rng);
    std::vector<SceneObject> occupied = prior_wall_objects;
    for (int i = 0; i < budget; ++i) {
        auto placed = place_on_free_segment(room_id, walls, openings, floor_objects, occupied,
                                            pool, catalog, ceiling_height, params, ids, rng);
        if (!placed) break;
        occupied.push_back(*placed);
        out.push_back(std::move(*placed));
    }
    return out;
}

std::optional<SceneObject> place_television(const FloorPlan& plan, int room_id,
                                            const std::vector<Wall>& walls,
                                            const std::vector<Opening>& openings,
                                            const std::vector<SceneObject>& floor_objects,
                                            const std::vector<SceneObject>& prior_wall_objects,
                                            const AssetCatalog& catalog, Split split,
                                            double ceiling_height, const FurnishParams& params,
                                            IdGen& ids, Rng& rng) {
    const RoomType type = plan.rooms[room_id].type;
    if (type == RoomType::Bathroom) return std::nullopt;

    // Rooms that already have a television (usually from a group on a TV
    // stand) never get a wall one.
    bool has_tv = false;
    auto scan = [&](const SceneObject& o, auto&& self) -> void {
        if (o.asset_type == "television") has_tv = true;
        for (const SceneObject& c : o.children) self(c, self);
    };
    for (const SceneObject& o : floor_objects) scan(o, scan);
    for (const SceneObject& o : prior_wall_objects) scan(o, scan);
    if (has_tv) return std::nullopt;

    const double p_attempt = type == RoomType::LivingRoom ? params.tv_p_living
                             : type == RoomType::Kitchen  ? params.tv_p_kitchen
                                                          : params.tv_p_bedroom;
    if (!rng.bernoulli(p_attempt)) return std::nullopt;

    const auto pool = catalog.wall_assets("television", split, /*mountable_only=*/true);
    return place_on_free_segment(room_id, walls, openings, floor_objects, prior_wall_objects,
                                 pool, catalog, ceiling_height, params, ids, rng);
}

// ---- surface objects ----

void place_surface_objects(House& house, const AssetCatalog& catalog, const FurnishParams& params,
                           IdGen& ids, Rng& rng) {
    const double b_house = sample_house_bias(params, rng);

    for (SceneObject& top : house.objects) {
        auto handle = [&](SceneObject& receptacle, auto&& self) -> void {
            // Children first would invalidate footprints we add, so recurse last.
            const AssetInstance* rec_inst = catalog.find_instance(receptacle.asset_id);
            const AssetType* rec_type =
                rec_inst ? catalog.find_type(receptacle.asset_type) : nullptr;
            if (rec_inst && rec_inst->is_receptacle && rec_type) {
                const Rect top_face = receptacle.footprint(rec_inst->bbox.x, rec_inst->bbox.z);
                const double top_y = receptacle.position.y + rec_inst->bbox.y;

                std::vector<Rect> occupied;
                for (const SceneObject& c : receptacle.children) {
                    const AssetInstance* ci = catalog.find_instance(c.asset_id);
                    if (ci) occupied.push_back(c.footprint(ci->bbox.x, ci->bbox.z));
                }

                auto it = catalog.spawn_table.objects_by_receptacle.find(receptacle.asset_type);
                if (it != catalog.spawn_table.objects_by_receptacle.end()) {
                    for (const std::string& obj_type : it->second) {
                        const AssetType* ot = catalog.find_type(obj_type);
                        if (!ot) continue;
                        const double p_spawn =
                            catalog.spawn_table.probability(receptacle.asset_type, obj_type);
                        const double p_eff =
                            p_spawn + b_house + rec_type->receptacle_bias + ot->object_bias;
                        if (p_eff <= 0.0) continue;
                        if (!rng.bernoulli(std::min(1.0, p_eff))) continue;

                        auto try_place_one = [&]() -> bool {
                            const auto pool =
                                catalog.instances_of_type(obj_type, house.metadata.split);
                            if (pool.empty()) return false;
                            const AssetInstance* inst = rng.pick(pool);
                            for (int attempt = 0; attempt < params.pose_attempts; ++attempt) {
                                const int g = static_cast<int>(rng.uniform_int(0, 3));
                                const auto [ew, ed] = extents_rotated(inst->bbox.x, inst->bbox.z, g);
                                if (ew > top_face.width() || ed > top_face.depth()) continue;
                                const double x = rng.uniform_real(top_face.x0 + ew / 2,
                                                                  top_face.x1 - ew / 2);
                                const double z = rng.uniform_real(top_face.z0 + ed / 2,
                                                                  top_face.z1 - ed / 2);
                                const Rect fp = Rect::from_center({x, z}, ew, ed);
                                bool collides = false;
                                for (const Rect& other : occupied)
                                    if (rects_overlap(fp, other)) collides = true;
                                if (collides) continue;
                                SceneObject obj;
                                obj.id = ids.object_id();
                                obj.asset_id = inst->id;
                                obj.asset_type = obj_type;
                                obj.position = {x, top_y, z};
                                obj.rotation = 90.0 * g;
                                obj.placement = ObjectPlacement::Surface;
                                obj.room = receptacle.room;
                                receptacle.children.push_back(std::move(obj));
                                occupied.push_back(fp);
                                return true;
                            }
                            return false;
                        };

                        if (!try_place_one()) continue;
                        // Extra copies of the same type, bias-free.
                        const int64_t extra = std::max<int64_t>(
                            0, std::min<int64_t>(params.max_per_receptacle,
                                                 rng.geometric(p_spawn) - 1) -
                                   1);
                        for (int64_t k = 0; k < extra; ++k) try_place_one();
                    }
                }
            }
            for (SceneObject& c : receptacle.children)
                if (c.placement == ObjectPlacement::SagMember) self(c, self);
        };
        handle(top, handle);
    }
}

// ---- appearance and states ----

void randomize_appearance(House& house, const AssetCatalog& catalog, const FurnishParams& params,
                          Rng& rng) {
    const bool swap_materials = rng.bernoulli(params.p_material_rand);
    house.for_each_object_mut([&](SceneObject& obj) {
        const AssetType* t = catalog.find_type(obj.asset_type);
        if (!t) return;
        if (t->color_randomizable && rng.bernoulli(params.p_color_rand)) {
            obj.color = Rgb{static_cast<int>(rng.uniform_int(0, 255)),
                            static_cast<int>(rng.uniform_int(0, 255)),
                            static_cast<int>(rng.uniform_int(0, 255))};
        }
        if (swap_materials && !t->material_class.empty()) {
            auto it = catalog.materials.object_materials.find(t->material_class);
            if (it != catalog.materials.object_materials.end() && !it->second.empty())
                obj.material = rng.pick(it->second);
        }
    });
}

void randomize_states(House& house, const AssetCatalog& catalog, Rng& rng) {
    house.for_each_object_mut([&](SceneObject& obj) {
        const AssetType* t = catalog.find_type(obj.asset_type);
        if (!t) return;
        if (t->toggleable) obj.states["on"] = rng.bernoulli(0.5) ? "true" : "false";
        if (t->dirtyable) obj.states["dirty"] = rng.bernoulli(0.5) ? "true" : "false";
        if (t->openable) obj.states["open"] = rng.bernoulli(0.5) ? "true" : "false";
    });
}

}  // namespace prochouse
