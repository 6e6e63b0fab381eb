#include "prochouse/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "prochouse/errors.hpp"

namespace prochouse {

using nlohmann::json;

namespace {

double num(double v) {
    const double r = std::round(v * 1e6) / 1e6;
    return r == 0.0 ? 0.0 : r;  // normalize -0
}

json vec2_json(const Vec2& v) { return {{"x", num(v.x)}, {"z", num(v.z)}}; }
json vec3_json(const Vec3& v) { return {{"x", num(v.x)}, {"y", num(v.y)}, {"z", num(v.z)}}; }

Vec2 vec2_from(const json& j) { return {j.at("x").get<double>(), j.at("z").get<double>()}; }
Vec3 vec3_from(const json& j) {
    return {j.at("x").get<double>(), j.at("y").get<double>(), j.at("z").get<double>()};
}

json rgb_json(const Rgb& c) { return {c[0], c[1], c[2]}; }
Rgb rgb_from(const json& j) { return {j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>()}; }

json material_json(const std::string& name, const std::optional<Rgb>& color) {
    json m;
    m["name"] = name;
    if (color) m["color"] = rgb_json(*color);
    return m;
}

json opening_json(const Opening& op) {
    json j;
    j["id"] = op.id;
    j["kind"] = to_string(op.kind);
    j["wallId"] = op.wall;
    j["roomA"] = op.room_a;
    j["roomB"] = op.room_b;
    if (!op.asset_id.empty()) j["assetId"] = op.asset_id;
    j["offset"] = num(op.offset);
    j["width"] = num(op.width);
    if (op.kind == OpeningKind::Doorway) j["openInto"] = op.open_into;
    return j;
}

Opening opening_from(const json& j) {
    Opening op;
    op.id = j.at("id").get<int>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "doorway")
        op.kind = OpeningKind::Doorway;
    else if (kind == "door_frame")
        op.kind = OpeningKind::DoorFrame;
    else if (kind == "open_wall")
        op.kind = OpeningKind::OpenWall;
    else if (kind == "exterior_door")
        op.kind = OpeningKind::ExteriorDoor;
    else
        throw ParseError("unknown opening kind '" + kind + "'");
    op.wall = j.at("wallId").get<int>();
    op.room_a = j.at("roomA").get<int>();
    op.room_b = j.at("roomB").get<int>();
    op.asset_id = j.value("assetId", std::string{});
    op.offset = j.at("offset").get<double>();
    op.width = j.at("width").get<double>();
    op.open_into = j.value("openInto", kExterior);
    return op;
}

json object_json(const SceneObject& o) {
    json j;
    j["id"] = o.id;
    j["assetId"] = o.asset_id;
    j["assetType"] = o.asset_type;
    j["position"] = vec3_json(o.position);
    j["rotation"] = num(o.rotation);
    j["placement"] = to_string(o.placement);
    j["zone"] = to_string(o.zone);
    j["roomId"] = o.room;
    j["kinematic"] = true;
    if (o.group >= 0) j["group"] = o.group;
    if (o.wall >= 0) j["wallId"] = o.wall;
    if (o.color) j["color"] = rgb_json(*o.color);
    if (o.material) j["material"] = *o.material;
    if (!o.states.empty()) {
        json s;
        for (const auto& [k, v] : o.states) s[k] = v == "true";
        j["states"] = s;
    }
    if (!o.children.empty()) {
        json kids = json::array();
        for (const SceneObject& c : o.children) kids.push_back(object_json(c));
        j["children"] = kids;
    }
    return j;
}

SceneObject object_from(const json& j) {
    SceneObject o;
    o.id = j.at("id").get<std::string>();
    o.asset_id = j.at("assetId").get<std::string>();
    o.asset_type = j.at("assetType").get<std::string>();
    o.position = vec3_from(j.at("position"));
    o.rotation = j.at("rotation").get<double>();
    const std::string placement = j.at("placement").get<std::string>();
    if (placement == "floor")
        o.placement = ObjectPlacement::Floor;
    else if (placement == "wall")
        o.placement = ObjectPlacement::Wall;
    else if (placement == "surface")
        o.placement = ObjectPlacement::Surface;
    else if (placement == "sag_member")
        o.placement = ObjectPlacement::SagMember;
    else
        throw ParseError("unknown placement '" + placement + "'");
    if (auto z = placement_zone_from_string(j.value("zone", "middle"))) o.zone = *z;
    o.room = j.at("roomId").get<int>();
    o.group = j.value("group", -1);
    o.wall = j.value("wallId", -1);
    if (j.contains("color")) o.color = rgb_from(j.at("color"));
    if (j.contains("material")) o.material = j.at("material").get<std::string>();
    if (j.contains("states"))
        for (const auto& [k, v] : j.at("states").items())
            o.states[k] = v.get<bool>() ? "true" : "false";
    if (j.contains("children"))
        for (const auto& jc : j.at("children")) o.children.push_back(object_from(jc));
    return o;
}

}  // namespace

std::string emit_json(const House& house) {
    json doc;
    doc["schemaVersion"] = house.metadata.schema_version;

    json meta;
    meta["seed"] = house.metadata.seed;
    meta["roomSpecId"] = house.metadata.room_spec_id;
    meta["split"] = to_string(house.metadata.split);
    meta["generator"] = house.metadata.generator;
    meta["retries"] = house.metadata.retries;
    doc["metadata"] = meta;

    doc["boundary"] = {{"width", num(house.boundary_width)},
                       {"depth", num(house.boundary_depth)},
                       {"cellSize", num(house.plan_scale)}};

    json rooms = json::array();
    for (const RoomInfo& r : house.rooms) {
        json jr;
        jr["id"] = r.id;
        jr["roomType"] = to_string(r.type);
        json poly = json::array();
        for (const Vec2& p : r.floor_polygon.pts) poly.push_back(vec2_json(p));
        jr["floorPolygon"] = poly;
        jr["wallMaterial"] = material_json(r.wall_material, r.wall_color);
        jr["floorMaterial"] = material_json(r.floor_material, std::nullopt);
        rooms.push_back(jr);
    }
    doc["rooms"] = rooms;

    json walls = json::array();
    for (const Wall& w : house.walls) {
        json jw;
        jw["id"] = w.id;
        jw["axis"] = std::string(1, w.axis);
        jw["coord"] = num(w.coord);
        jw["lo"] = num(w.lo);
        jw["hi"] = num(w.hi);
        jw["roomNeg"] = w.room_neg;
        jw["roomPos"] = w.room_pos;
        walls.push_back(jw);
    }
    doc["walls"] = walls;

    json doors = json::array();
    for (const Opening& op : house.doors) doors.push_back(opening_json(op));
    doc["doors"] = doors;
    json open_walls = json::array();
    for (const Opening& op : house.open_walls) open_walls.push_back(opening_json(op));
    doc["openWalls"] = open_walls;

    json windows = json::array();
    for (const SceneObject& w : house.windows) windows.push_back(object_json(w));
    doc["windows"] = windows;

    json objects = json::array();
    for (const SceneObject& o : house.objects) objects.push_back(object_json(o));
    doc["objects"] = objects;

    json pp;
    pp["ceilingHeight"] = num(house.ceiling_height);
    pp["skyboxId"] = house.lighting.skybox_id;
    pp["skyboxTimeOfDay"] = house.lighting.time_of_day;
    pp["ceilingMaterial"] = material_json(house.structure.ceiling_material, house.structure.ceiling_color);
    json lights;
    lights["directional"] = {{"direction", vec3_json(house.lighting.directional.direction)},
                             {"color", rgb_json(house.lighting.directional.color)},
                             {"intensity", num(house.lighting.directional.intensity)}};
    json points = json::array();
    for (const PointLight& pl : house.lighting.point_lights) {
        json jp;
        jp["position"] = vec3_json(pl.position);
        jp["roomId"] = pl.room;
        if (!pl.object_id.empty()) jp["objectId"] = pl.object_id;
        jp["color"] = rgb_json(pl.color);
        jp["intensity"] = num(pl.intensity);
        points.push_back(jp);
    }
    lights["point"] = points;
    pp["lights"] = lights;
    pp["wallsSame"] = house.structure.walls_same;
    pp["floorsSame"] = house.structure.floors_same;
    doc["proceduralParameters"] = pp;

    return doc.dump(2) + "\n";
}

House parse_house(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("house: ") + e.what());
    }
    House h;
    try {
        h.metadata.schema_version = doc.at("schemaVersion").get<int>();
        const json& meta = doc.at("metadata");
        h.metadata.seed = meta.at("seed").get<uint64_t>();
        h.metadata.room_spec_id = meta.at("roomSpecId").get<std::string>();
        h.metadata.split = split_from_string(meta.at("split").get<std::string>()).value_or(Split::Train);
        h.metadata.generator = meta.at("generator").get<std::string>();
        h.metadata.retries = meta.at("retries").get<int>();

        h.boundary_width = doc.at("boundary").at("width").get<double>();
        h.boundary_depth = doc.at("boundary").at("depth").get<double>();
        h.plan_scale = doc.at("boundary").value("cellSize", 1.0);

        for (const auto& jr : doc.at("rooms")) {
            RoomInfo r;
            r.id = jr.at("id").get<int>();
            r.type = room_type_from_string(jr.at("roomType").get<std::string>()).value();
            for (const auto& jp : jr.at("floorPolygon")) r.floor_polygon.pts.push_back(vec2_from(jp));
            r.wall_material = jr.at("wallMaterial").at("name").get<std::string>();
            if (jr.at("wallMaterial").contains("color"))
                r.wall_color = rgb_from(jr.at("wallMaterial").at("color"));
            r.floor_material = jr.at("floorMaterial").at("name").get<std::string>();
            h.rooms.push_back(std::move(r));
        }
        for (const auto& jw : doc.at("walls")) {
            Wall w;
            w.id = jw.at("id").get<int>();
            w.axis = jw.at("axis").get<std::string>()[0];
            w.coord = jw.at("coord").get<double>();
            w.lo = jw.at("lo").get<double>();
            w.hi = jw.at("hi").get<double>();
            w.room_neg = jw.at("roomNeg").get<int>();
            w.room_pos = jw.at("roomPos").get<int>();
            h.walls.push_back(w);
        }
        for (const auto& jo : doc.at("doors")) h.doors.push_back(opening_from(jo));
        for (const auto& jo : doc.at("openWalls")) h.open_walls.push_back(opening_from(jo));
        for (const auto& jw : doc.at("windows")) h.windows.push_back(object_from(jw));
        for (const auto& jo : doc.at("objects")) h.objects.push_back(object_from(jo));

        const json& pp = doc.at("proceduralParameters");
        h.ceiling_height = pp.at("ceilingHeight").get<double>();
        h.lighting.skybox_id = pp.at("skyboxId").get<std::string>();
        h.lighting.time_of_day = pp.at("skyboxTimeOfDay").get<std::string>();
        h.structure.ceiling_material = pp.at("ceilingMaterial").at("name").get<std::string>();
        if (pp.at("ceilingMaterial").contains("color"))
            h.structure.ceiling_color = rgb_from(pp.at("ceilingMaterial").at("color"));
        h.structure.walls_same = pp.at("wallsSame").get<bool>();
        h.structure.floors_same = pp.at("floorsSame").get<bool>();
        const json& lights = pp.at("lights");
        h.lighting.directional.direction = vec3_from(lights.at("directional").at("direction"));
        h.lighting.directional.color = rgb_from(lights.at("directional").at("color"));
        h.lighting.directional.intensity = lights.at("directional").at("intensity").get<double>();
        for (const auto& jp : lights.at("point")) {
            PointLight pl;
            pl.position = vec3_from(jp.at("position"));
            pl.room = jp.at("roomId").get<int>();
            pl.object_id = jp.value("objectId", std::string{});
            pl.color = rgb_from(jp.at("color"));
            pl.intensity = jp.at("intensity").get<double>();
            h.lighting.point_lights.push_back(pl);
        }
        // Per-room structure mirrors live in rooms[]; rebuild the aggregate.
        h.structure.wall_material.resize(h.rooms.size());
        h.structure.wall_color.resize(h.rooms.size());
        h.structure.wall_solid.resize(h.rooms.size());
        h.structure.floor_material.resize(h.rooms.size());
        for (const RoomInfo& r : h.rooms) {
            h.structure.wall_material[r.id] = r.wall_material;
            h.structure.wall_color[r.id] = r.wall_color;
            h.structure.wall_solid[r.id] = r.wall_color.has_value();
            h.structure.floor_material[r.id] = r.floor_material;
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("house: ") + e.what());
    }
    return h;
}

House load_house(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open house file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_house(ss.str());
}

}  // namespace prochouse
