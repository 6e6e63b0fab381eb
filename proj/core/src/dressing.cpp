#include "prochouse/dressing.hpp"

#include <algorithm>
#include <deque>

namespace prochouse {

namespace {

struct WallPick {
    std::string material;
    std::optional<Rgb> color;
};

WallPick sample_wall_material(const MaterialCatalog& m, const DressingParams& p, Rng& rng) {
    WallPick pick;
    if (rng.bernoulli(p.p_wall_solid)) {
        pick.material = "solid";
        pick.color = rng.pick(m.solid_colors);
    } else {
        pick.material = rng.pick(m.wall_textures);
    }
    return pick;
}

// Most interior cell of the room by BFS distance from non-room cells; used
// when the centroid of a non-convex room lands outside the polygon.
Vec2 interior_fallback(const PlanRoom& room, double scale) {
    const GridMask& cells = room.cells;
    std::vector<int> dist(static_cast<size_t>(cells.w) * cells.h, -1);
    std::deque<int> q;
    for (int z = 0; z < cells.h; ++z)
        for (int x = 0; x < cells.w; ++x) {
            if (!cells.at(x, z)) continue;
            const bool edge = !cells.at(x - 1, z) || !cells.at(x + 1, z) || !cells.at(x, z - 1) ||
                              !cells.at(x, z + 1);
            if (edge) {
                dist[z * cells.w + x] = 0;
                q.push_back(z * cells.w + x);
            }
        }
    while (!q.empty()) {
        const int cur = q.front();
        q.pop_front();
        const int x = cur % cells.w, z = cur / cells.w;
        const int dx[4] = {1, -1, 0, 0}, dz[4] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
            const int nx = x + dx[d], nz = z + dz[d];
            if (!cells.at(nx, nz)) continue;
            const int ni = nz * cells.w + nx;
            if (dist[ni] < 0) {
                dist[ni] = dist[cur] + 1;
                q.push_back(ni);
            }
        }
    }
    int best = -1, best_d = -1;
    for (int i = 0; i < cells.w * cells.h; ++i)
        if (cells.cells[i] && dist[i] > best_d) {
            best_d = dist[i];
            best = i;
        }
    return {(best % cells.w + 0.5) * scale, (best / cells.w + 0.5) * scale};
}

}  // namespace

StructureMaterials sample_structure_materials(const FloorPlan& plan,
                                              const MaterialCatalog& materials,
                                              const DressingParams& params, Rng& rng) {
    const int n = static_cast<int>(plan.rooms.size());
    StructureMaterials out;
    out.walls_same = rng.bernoulli(params.p_walls_same);
    out.floors_same = rng.bernoulli(params.p_floors_same);
    out.wall_solid.resize(n);
    out.wall_material.resize(n);
    out.wall_color.resize(n);
    out.floor_material.resize(n);

    if (out.walls_same) {
        const WallPick pick = sample_wall_material(materials, params, rng);
        for (int i = 0; i < n; ++i) {
            out.wall_solid[i] = pick.color.has_value();
            out.wall_material[i] = pick.material;
            out.wall_color[i] = pick.color;
        }
        out.ceiling_material = pick.material;
        out.ceiling_color = pick.color;
    } else {
        for (int i = 0; i < n; ++i) {
            const WallPick pick = sample_wall_material(materials, params, rng);
            out.wall_solid[i] = pick.color.has_value();
            out.wall_material[i] = pick.material;
            out.wall_color[i] = pick.color;
        }
        const WallPick ceiling = sample_wall_material(materials, params, rng);
        out.ceiling_material = ceiling.material;
        out.ceiling_color = ceiling.color;
    }

    if (out.floors_same) {
        const std::string mat = rng.pick(materials.floor_materials);
        for (int i = 0; i < n; ++i) out.floor_material[i] = mat;
    } else {
        for (int i = 0; i < n; ++i) out.floor_material[i] = rng.pick(materials.floor_materials);
    }
    return out;
}

double sample_ceiling_height(const DressingParams& params, Rng& rng) {
    return params.ceiling_min +
           (params.ceiling_max - params.ceiling_min) * rng.beta(params.ceiling_alpha, params.ceiling_beta);
}

std::pair<std::string, std::string> sample_skybox(const MaterialCatalog& materials,
                                                  const DressingParams& params, Rng& rng) {
    std::vector<std::pair<std::string, std::string>> all;
    std::vector<double> weights;
    for (const auto& [tod, ids] : materials.skyboxes) {
        auto it = params.skybox_group_weights.find(tod);
        const double w = it == params.skybox_group_weights.end() ? 1.0 : it->second;
        for (const std::string& id : ids) {
            all.push_back({id, tod});
            weights.push_back(w);
        }
    }
    return all[rng.pick_weighted(weights)];
}

Lighting place_lights(const FloorPlan& plan, const std::vector<SceneObject>& objects,
                      const AssetCatalog& catalog, double ceiling_height,
                      const std::string& skybox_id, const std::string& time_of_day,
                      const DressingParams& params) {
    Lighting out;
    out.skybox_id = skybox_id;
    out.time_of_day = time_of_day;

    // The sun angle and tint follow the time of day.
    if (time_of_day == "golden_hour") {
        out.directional = {{-0.8, -0.35, -0.3}, {255, 200, 150}, 0.8};
    } else if (time_of_day == "blue_hour") {
        out.directional = {{-0.5, -0.4, -0.2}, {170, 190, 230}, 0.35};
    } else {
        out.directional = {{-0.3, -1.0, -0.25}, {255, 244, 214}, 1.0};
    }

    for (const PlanRoom& room : plan.rooms) {
        const Polygon poly = room.polygon.scaled(plan.scale);
        Vec2 at = poly.centroid();
        if (!poly.contains(at)) at = interior_fallback(room, plan.scale);
        PointLight light;
        light.position = {at.x, ceiling_height - params.light_drop, at.z};
        light.room = room.id;
        light.intensity = params.room_light_intensity;
        out.point_lights.push_back(light);
    }

    for (const SceneObject& obj : objects) {
        auto add_lamp_lights = [&](const SceneObject& o, auto&& self) -> void {
            const AssetType* t = catalog.find_type(o.asset_type);
            if (t && t->toggleable && o.asset_type.find("lamp") != std::string::npos) {
                const AssetInstance* inst = catalog.find_instance(o.asset_id);
                PointLight light;
                light.position = {o.position.x, o.position.y + (inst ? inst->bbox.y : 1.0), o.position.z};
                light.room = o.room;
                light.object_id = o.id;
                auto it = o.states.find("on");
                light.intensity = (it != o.states.end() && it->second == "false") ? 0.0
                                                                                  : params.lamp_intensity;
                out.point_lights.push_back(light);
            }
            for (const SceneObject& c : o.children) self(c, self);
        };
        add_lamp_lights(obj, add_lamp_lights);
    }
    return out;
}

}  // namespace prochouse
