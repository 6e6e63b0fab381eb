#include "prochouse/validate.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "prochouse/errors.hpp"

namespace prochouse {

int NavGrid::reachable_count() const {
    return static_cast<int>(std::count(reachable.begin(), reachable.end(), uint8_t{1}));
}

namespace {

// Wall pieces that block movement: each wall minus its passable opening spans.
struct Blocker {
    Vec2 a, b;
};

std::vector<Blocker> blocking_segments(const House& house) {
    std::vector<Blocker> out;
    for (const Wall& wall : house.walls) {
        std::vector<std::pair<double, double>> passable;
        auto collect = [&](const Opening& op) {
            if (op.wall == wall.id && op.passable())
                passable.push_back({wall.lo + op.offset, wall.lo + op.offset + op.width});
        };
        for (const Opening& op : house.doors) collect(op);
        for (const Opening& op : house.open_walls) collect(op);
        std::sort(passable.begin(), passable.end());
        double cursor = wall.lo;
        auto emit = [&](double lo, double hi) {
            if (hi - lo < 1e-9) return;
            if (wall.axis == 'x')
                out.push_back({{lo, wall.coord}, {hi, wall.coord}});
            else
                out.push_back({{wall.coord, lo}, {wall.coord, hi}});
        };
        for (const auto& [lo, hi] : passable) {
            emit(cursor, std::min(lo, wall.hi));
            cursor = std::max(cursor, hi);
        }
        emit(cursor, wall.hi);
    }
    return out;
}

std::vector<Rect> blocking_footprints(const House& house, const AssetCatalog& catalog) {
    std::vector<Rect> out;
    house.for_each_object([&](const SceneObject& obj) {
        if (obj.placement == ObjectPlacement::Wall) return;
        if (obj.position.y > 1e-6) return;  // on top of something, not on the floor
        const AssetInstance* inst = catalog.find_instance(obj.asset_id);
        if (inst) out.push_back(obj.footprint(inst->bbox.x, inst->bbox.z));
    });
    return out;
}

}  // namespace

NavGrid reachable_positions(const House& house, const AssetCatalog& catalog,
                            const ValidateParams& params) {
    NavGrid grid;
    grid.cell = params.cell;
    grid.origin = {0.0, 0.0};
    grid.w = static_cast<int>(std::ceil(house.boundary_width / params.cell));
    grid.h = static_cast<int>(std::ceil(house.boundary_depth / params.cell));
    grid.free.assign(static_cast<size_t>(grid.w) * grid.h, 0);
    grid.reachable.assign(static_cast<size_t>(grid.w) * grid.h, 0);

    const std::vector<Blocker> blockers = blocking_segments(house);
    const std::vector<Rect> footprints = blocking_footprints(house, catalog);
    const double r = params.agent_radius;

    for (int z = 0; z < grid.h; ++z) {
        for (int x = 0; x < grid.w; ++x) {
            const Vec2 c = grid.center(x, z);
            bool in_room = false;
            for (const RoomInfo& room : house.rooms)
                if (room.floor_polygon.contains(c)) in_room = true;
            if (!in_room) continue;
            bool blocked = false;
            for (const Blocker& b : blockers)
                if (dist_point_segment(c, b.a, b.b) < r) blocked = true;
            for (const Rect& f : footprints)
                if (!blocked && f.expanded(r).contains(c, -1e-9)) blocked = true;
            if (!blocked) grid.free[static_cast<size_t>(z) * grid.w + x] = 1;
        }
    }

    int seed = -1;
    for (size_t i = 0; i < grid.free.size() && seed < 0; ++i)
        if (grid.free[i]) seed = static_cast<int>(i);
    if (seed < 0) throw NoFreeCell("agent cannot be placed anywhere in the house");

    std::deque<int> q{seed};
    grid.reachable[seed] = 1;
    while (!q.empty()) {
        const int cur = q.front();
        q.pop_front();
        const int x = cur % grid.w, z = cur / grid.w;
        const int dx[4] = {1, -1, 0, 0}, dz[4] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
            const int nx = x + dx[d], nz = z + dz[d];
            if (!grid.is_free(nx, nz)) continue;
            const int ni = nz * grid.w + nx;
            if (!grid.reachable[ni]) {
                grid.reachable[ni] = 1;
                q.push_back(ni);
            }
        }
    }
    return grid;
}

ValidationReport validate_house(const House& house, const AssetCatalog& catalog,
                                const ValidateParams& params) {
    ValidationReport report;
    report.per_room_reachable.assign(house.rooms.size(), 0);
    NavGrid grid;
    try {
        grid = reachable_positions(house, catalog, params);
    } catch (const NoFreeCell&) {
        report.pass = false;
        report.failures.push_back("no free cell for the agent");
        return report;
    }
    for (int z = 0; z < grid.h; ++z)
        for (int x = 0; x < grid.w; ++x) {
            if (!grid.is_reachable(x, z)) continue;
            const Vec2 c = grid.center(x, z);
            for (const RoomInfo& room : house.rooms)
                if (room.floor_polygon.contains(c)) report.per_room_reachable[room.id]++;
        }
    report.pass = true;
    for (const RoomInfo& room : house.rooms) {
        if (report.per_room_reachable[room.id] < params.min_reachable_per_room) {
            report.pass = false;
            report.failures.push_back("room " + std::to_string(room.id) + " (" +
                                      to_string(room.type) + ") has " +
                                      std::to_string(report.per_room_reachable[room.id]) +
                                      " reachable positions");
        }
    }
    return report;
}

std::vector<std::string> reachable_targets(const House& house, const AssetCatalog& catalog,
                                           const NavGrid& grid, const std::string& object_type,
                                           const ValidateParams& params) {
    // Occluders: walls (minus passable spans) and footprints of objects taller
    // than the camera.
    const std::vector<Blocker> wall_blockers = blocking_segments(house);
    struct TallBox {
        Rect rect;
        const SceneObject* obj;
    };
    std::vector<TallBox> tall;
    house.for_each_object([&](const SceneObject& obj) {
        if (obj.placement == ObjectPlacement::Wall) return;
        const AssetInstance* inst = catalog.find_instance(obj.asset_id);
        if (!inst) return;
        if (obj.position.y + inst->bbox.y > params.camera_height)
            tall.push_back({obj.footprint(inst->bbox.x, inst->bbox.z), &obj});
    });

    std::vector<std::pair<int, int>> reachable_cells;
    for (int z = 0; z < grid.h; ++z)
        for (int x = 0; x < grid.w; ++x)
            if (grid.is_reachable(x, z)) reachable_cells.push_back({x, z});

    std::vector<std::string> out;
    house.for_each_object([&](const SceneObject& obj) {
        if (obj.asset_type != object_type) return;
        const AssetInstance* inst = catalog.find_instance(obj.asset_id);
        if (!inst) return;
        const Vec2 center{obj.position.x, obj.position.z};

        std::vector<std::pair<double, Vec2>> nearest;
        for (const auto& [x, z] : reachable_cells) {
            const Vec2 c = grid.center(x, z);
            nearest.push_back({distance(c, center), c});
        }
        std::sort(nearest.begin(), nearest.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if (nearest.size() > static_cast<size_t>(params.nearest_positions))
            nearest.resize(params.nearest_positions);

        bool seen = false;
        for (const auto& [d2, agent] : nearest) {
            for (const Vec3& vp_local : inst->visibility_points) {
                if (seen) break;
                // Visibility points are authored in the instance frame.
                const double rad = obj.rotation * 0.017453292519943295;
                const double ca = std::cos(rad), sa = std::sin(rad);
                const Vec2 vp{obj.position.x + vp_local.x * ca + vp_local.z * sa,
                              obj.position.z - vp_local.x * sa + vp_local.z * ca};
                const double vp_y = obj.position.y + vp_local.y;
                const double dx = vp.x - agent.x, dz = vp.z - agent.z;
                const double dy = vp_y - params.camera_height;
                if (std::sqrt(dx * dx + dz * dz + dy * dy) >= params.reach_distance) continue;
                bool occluded = false;
                for (const Blocker& b : wall_blockers)
                    if (segments_cross(agent, vp, b.a, b.b)) occluded = true;
                for (const TallBox& t : tall) {
                    if (occluded) break;
                    if (t.obj == &obj) continue;  // objects do not occlude themselves
                    if (segment_intersects_rect(agent, vp, t.rect)) occluded = true;
                }
                if (!occluded) seen = true;
            }
            if (seen) break;
        }
        if (seen) out.push_back(obj.id);
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::string sample_episode_target(const std::vector<std::string>& available_types,
                                  EpisodeTargetState& state, Rng& rng) {
    if (available_types.empty()) throw NoReachableTarget();
    std::vector<std::string> sorted = available_types;
    std::sort(sorted.begin(), sorted.end());

    std::string chosen;
    if (rng.bernoulli(state.epsilon)) {
        chosen = sorted[static_cast<size_t>(rng.uniform_int(0, static_cast<int64_t>(sorted.size()) - 1))];
    } else {
        chosen = sorted[0];
        for (const std::string& t : sorted)
            if (state.sample_counts[t] < state.sample_counts[chosen]) chosen = t;
    }
    state.sample_counts[chosen]++;
    return chosen;
}

}  // namespace prochouse
