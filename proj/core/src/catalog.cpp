#include "prochouse/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "prochouse/errors.hpp"

namespace prochouse {

using nlohmann::json;

namespace {

AnchorV anchor_v_from_string(const std::string& s, const std::string& where) {
    if (s == "top") return AnchorV::Top;
    if (s == "center") return AnchorV::Center;
    if (s == "bottom") return AnchorV::Bottom;
    throw SchemaError("bad vertical anchor '" + s + "' in " + where);
}

AnchorH anchor_h_from_string(const std::string& s, const std::string& where) {
    if (s == "left") return AnchorH::Left;
    if (s == "center") return AnchorH::Center;
    if (s == "right") return AnchorH::Right;
    throw SchemaError("bad horizontal anchor '" + s + "' in " + where);
}

const char* to_string(AnchorV v) {
    switch (v) {
        case AnchorV::Top: return "top";
        case AnchorV::Center: return "center";
        case AnchorV::Bottom: return "bottom";
    }
    return "?";
}

const char* to_string(AnchorH h) {
    switch (h) {
        case AnchorH::Left: return "left";
        case AnchorH::Center: return "center";
        case AnchorH::Right: return "right";
    }
    return "?";
}

std::vector<Vec3> default_visibility_points(const Vec3& bbox) {
    const double hx = bbox.x / 2, hy = bbox.y / 2, hz = bbox.z / 2;
    return {{hx, hy, 0}, {-hx, hy, 0}, {0, hy, hz}, {0, hy, -hz}, {0, bbox.y, 0}, {0, 0, 0}};
}

AssetType parse_type(const json& jt) {
    AssetType t;
    t.name = jt.at("name").get<std::string>();
    const std::string where = "asset_type '" + t.name + "'";
    t.placeable_on_floor = jt.value("placeable_on_floor", false);
    if (jt.contains("placements")) {
        for (const auto& p : jt.at("placements")) {
            auto z = placement_zone_from_string(p.get<std::string>());
            if (!z) throw SchemaError("unknown placement in " + where);
            t.placements |= placement_bit(*z);
        }
    }
    if ((t.placements != 0) != t.placeable_on_floor)
        throw SchemaError("placements must be nonempty iff placeable_on_floor, " + where);
    if (jt.contains("room_weights")) {
        for (const auto& [room, w] : jt.at("room_weights").items()) {
            auto rt = room_type_from_string(room);
            if (!rt) throw SchemaError("unknown room type '" + room + "' in " + where);
            const int wv = w.get<int>();
            if (wv < 0 || wv > 3)
                throw SchemaError("room_weight " + std::to_string(wv) + " out of {0,1,2,3} in " + where);
            t.room_weights[static_cast<int>(*rt)] = wv;
        }
    }
    t.allow_duplicates_in_room = jt.value("allow_duplicates_in_room", true);
    t.material_class = jt.value("material_class", std::string{});
    t.color_randomizable = jt.value("color_randomizable", false);
    if (jt.contains("states")) {
        for (const auto& s : jt.at("states")) {
            const std::string sv = s.get<std::string>();
            if (sv == "toggleable")
                t.toggleable = true;
            else if (sv == "dirtyable")
                t.dirtyable = true;
            else if (sv == "openable")
                t.openable = true;
            else
                throw SchemaError("unknown state '" + sv + "' in " + where);
        }
    }
    t.object_bias = jt.value("object_bias", 0.0);
    t.receptacle_bias = jt.value("receptacle_bias", 0.2);
    if (!std::isfinite(t.object_bias) || !std::isfinite(t.receptacle_bias))
        throw SchemaError("non-finite bias in " + where);
    t.wall_placement = jt.value("wall_placement", std::string{});
    t.door_kind = jt.value("door_kind", std::string{});
    return t;
}

AssetInstance parse_instance(const json& ji) {
    AssetInstance inst;
    inst.id = ji.at("id").get<std::string>();
    const std::string where = "asset_instance '" + inst.id + "'";
    inst.asset_type = ji.at("asset_type").get<std::string>();
    const auto& bb = ji.at("bbox");
    inst.bbox = {bb.at("x").get<double>(), bb.at("y").get<double>(), bb.at("z").get<double>()};
    if (inst.bbox.x <= 0 || inst.bbox.y <= 0 || inst.bbox.z <= 0)
        throw SchemaError("bbox extents must be positive in " + where);
    auto split = split_from_string(ji.value("split", "any"));
    if (!split) throw SchemaError("bad split in " + where);
    inst.split = *split;
    inst.is_receptacle = ji.value("is_receptacle", false);
    inst.wall_mountable = ji.value("wall_mountable", false);
    if (ji.contains("visibility_points")) {
        for (const auto& vp : ji.at("visibility_points"))
            inst.visibility_points.push_back(
                {vp.at(0).get<double>(), vp.at(1).get<double>(), vp.at(2).get<double>()});
        if (inst.visibility_points.size() > 6)
            throw SchemaError("more than 6 visibility points in " + where);
    }
    if (inst.visibility_points.empty()) inst.visibility_points = default_visibility_points(inst.bbox);
    return inst;
}

MaterialCatalog parse_materials(const json& jm) {
    MaterialCatalog m;
    for (const auto& c : jm.at("solid_colors"))
        m.solid_colors.push_back({c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<int>()});
    m.wall_textures = jm.at("wall_textures").get<std::vector<std::string>>();
    m.floor_materials = jm.at("floor_materials").get<std::vector<std::string>>();
    for (const auto& [tod, ids] : jm.at("skyboxes").items())
        m.skyboxes[tod] = ids.get<std::vector<std::string>>();
    if (jm.contains("object_materials"))
        for (const auto& [cls, ids] : jm.at("object_materials").items())
            m.object_materials[cls] = ids.get<std::vector<std::string>>();
    if (m.solid_colors.empty() || m.wall_textures.empty() || m.floor_materials.empty())
        throw SchemaError("material lists must be nonempty");
    for (const auto& [tod, ids] : m.skyboxes)
        if (ids.empty()) throw SchemaError("empty skybox group '" + tod + "'");
    return m;
}

SagDef parse_sag(const json& js) {
    SagDef def;
    def.id = js.at("id").get<std::string>();
    const std::string where = "semantic_asset_group '" + def.id + "'";
    if (js.contains("placements")) {
        for (const auto& p : js.at("placements")) {
            auto z = placement_zone_from_string(p.get<std::string>());
            if (!z) throw SchemaError("unknown placement in " + where);
            def.placements |= placement_bit(*z);
        }
    }
    if (js.contains("room_weights")) {
        for (const auto& [room, w] : js.at("room_weights").items()) {
            auto rt = room_type_from_string(room);
            if (!rt) throw SchemaError("unknown room type in " + where);
            const int wv = w.get<int>();
            if (wv < 0 || wv > 3) throw SchemaError("room_weight out of {0,1,2,3} in " + where);
            def.room_weights[static_cast<int>(*rt)] = wv;
        }
    }
    for (const auto& jsamp : js.at("samplers")) {
        AssetSampler s;
        s.id = jsamp.at("id").get<std::string>();
        s.asset_type = jsamp.at("asset_type").get<std::string>();
        s.candidates = jsamp.at("candidates").get<std::vector<std::string>>();
        if (s.candidates.empty()) throw SchemaError("sampler '" + s.id + "' has no candidates in " + where);
        std::sort(s.candidates.begin(), s.candidates.end());
        def.samplers.push_back(std::move(s));
    }
    if (js.contains("edges")) {
        for (const auto& je : js.at("edges")) {
            SagEdge e;
            e.parent = je.at("parent").get<std::string>();
            e.child = je.at("child").get<std::string>();
            e.anchor_v = anchor_v_from_string(je.value("anchor_v", "center"), where);
            e.anchor_h = anchor_h_from_string(je.value("anchor_h", "center"), where);
            e.pivot_v = anchor_v_from_string(je.value("pivot_v", "center"), where);
            e.pivot_h = anchor_h_from_string(je.value("pivot_h", "center"), where);
            if (je.contains("offset")) {
                e.offset = {je.at("offset").at(0).get<double>(), je.at("offset").at(1).get<double>()};
            }
            e.rotation = je.value("rotation", 0.0);
            e.on_top = je.value("on_top", false);
            e.allow_overlap = je.value("allow_overlap", false);
            def.edges.push_back(std::move(e));
        }
    }
    if (js.contains("links"))
        for (const auto& jl : js.at("links")) def.links.push_back(jl.get<std::vector<std::string>>());

    // The sampler graph must be a tree: every sampler except one root has
    // exactly one parent edge.
    std::map<std::string, int> parent_count;
    for (const auto& s : def.samplers) parent_count[s.id] = 0;
    for (const auto& e : def.edges) {
        if (!def.find_sampler(e.parent) || !def.find_sampler(e.child))
            throw SchemaError("edge references unknown sampler in " + where);
        parent_count[e.child]++;
    }
    std::vector<std::string> roots;
    for (const auto& [id, n] : parent_count) {
        if (n == 0) roots.push_back(id);
        if (n > 1) throw SchemaError("sampler '" + id + "' has several parents in " + where);
    }
    if (roots.size() != 1)
        throw SchemaError("sampler graph must have exactly one root in " + where);
    def.root = roots[0];

    for (const auto& link : def.links) {
        std::set<std::string> link_types;
        for (const auto& sid : link) {
            const AssetSampler* s = def.find_sampler(sid);
            if (!s) throw SchemaError("link references unknown sampler '" + sid + "' in " + where);
            link_types.insert(s->asset_type);
        }
        if (link_types.size() > 1)
            throw SchemaError("linked samplers must share one asset type in " + where);
    }
    return def;
}

}  // namespace

const AssetType* AssetCatalog::find_type(const std::string& name) const {
    auto it = types.find(name);
    return it == types.end() ? nullptr : &it->second;
}

const AssetInstance* AssetCatalog::find_instance(const std::string& id) const {
    auto it = std::lower_bound(instances.begin(), instances.end(), id,
                               [](const AssetInstance& a, const std::string& b) { return a.id < b; });
    return (it != instances.end() && it->id == id) ? &*it : nullptr;
}

const SagDef* AssetCatalog::find_sag(const std::string& id) const {
    for (const auto& s : sags)
        if (s.id == id) return &s;
    return nullptr;
}

std::vector<const AssetInstance*> AssetCatalog::instances_of_type(const std::string& type,
                                                                  Split split) const {
    std::vector<const AssetInstance*> out;
    for (const auto& inst : instances)
        if (inst.asset_type == type && split_matches(inst.split, split)) out.push_back(&inst);
    return out;
}

std::vector<const AssetInstance*> AssetCatalog::filter_floor_assets(RoomType room,
                                                                    PlacementZone placement,
                                                                    Split split, double max_w,
                                                                    double max_d, double pad) const {
    std::vector<const AssetInstance*> out;
    if (max_w <= 0 || max_d <= 0) return out;
    for (const auto& inst : instances) {
        const AssetType* t = find_type(inst.asset_type);
        if (!t || !t->placeable_on_floor) continue;
        if (t->room_weight(room) <= 0) continue;
        if (!t->supports(placement)) continue;
        if (!split_matches(inst.split, split)) continue;
        if (!fits_with_pad(inst.bbox.x, inst.bbox.z, max_w, max_d, pad)) continue;
        out.push_back(&inst);
    }
    return out;  // instances are already sorted by id
}

std::vector<const AssetInstance*> AssetCatalog::door_assets(const std::string& kind,
                                                            Split split) const {
    std::vector<const AssetInstance*> out;
    for (const auto& inst : instances) {
        const AssetType* t = find_type(inst.asset_type);
        if (t && t->door_kind == kind && split_matches(inst.split, split)) out.push_back(&inst);
    }
    return out;
}

std::vector<const AssetInstance*> AssetCatalog::wall_assets(const std::string& wall_placement,
                                                            Split split, bool mountable_only) const {
    std::vector<const AssetInstance*> out;
    for (const auto& inst : instances) {
        const AssetType* t = find_type(inst.asset_type);
        if (!t || t->wall_placement != wall_placement) continue;
        if (!split_matches(inst.split, split)) continue;
        if (mountable_only && !inst.wall_mountable) continue;
        out.push_back(&inst);
    }
    return out;
}

double AssetCatalog::min_door_width(Split split) const {
    double w = 1e300;
    for (const char* kind : {"doorway", "door_frame"})
        for (const AssetInstance* d : door_assets(kind, split)) w = std::min(w, d->bbox.x);
    return w;
}

AssetCatalog parse_catalog_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("catalog: ") + e.what());
    }
    AssetCatalog cat;
    try {
        cat.schema_version = doc.at("schema_version").get<int>();
        for (const auto& jt : doc.at("asset_types")) {
            AssetType t = parse_type(jt);
            if (cat.types.count(t.name)) throw SchemaError("duplicate asset_type '" + t.name + "'");
            cat.types.emplace(t.name, std::move(t));
        }
        for (const auto& ji : doc.at("asset_instances")) {
            AssetInstance inst = parse_instance(ji);
            if (!cat.types.count(inst.asset_type))
                throw SchemaError("asset_instance '" + inst.id + "' has unknown type '" +
                                  inst.asset_type + "'");
            cat.instances.push_back(std::move(inst));
        }
        std::sort(cat.instances.begin(), cat.instances.end(),
                  [](const AssetInstance& a, const AssetInstance& b) { return a.id < b.id; });
        for (size_t i = 1; i < cat.instances.size(); ++i)
            if (cat.instances[i].id == cat.instances[i - 1].id)
                throw SchemaError("duplicate asset_instance '" + cat.instances[i].id + "'");

        // Split 'any' is reserved for rare types (5 or fewer unique assets).
        std::map<std::string, int> type_counts;
        for (const auto& inst : cat.instances) type_counts[inst.asset_type]++;
        for (const auto& inst : cat.instances)
            if (inst.split == Split::Any && type_counts[inst.asset_type] > 5)
                throw SchemaError("asset_instance '" + inst.id + "' uses split=any but type '" +
                                  inst.asset_type + "' has " +
                                  std::to_string(type_counts[inst.asset_type]) + " instances");

        cat.materials = parse_materials(doc.at("materials"));

        for (const auto& je : doc.at("spawn_table")) {
            const std::string rec = je.at("receptacle").get<std::string>();
            const std::string obj = je.at("object").get<std::string>();
            SpawnEntry entry;
            entry.occurrences = je.at("occurrences").get<int>();
            entry.receptacle_count = je.at("receptacle_count").get<int>();
            if (entry.occurrences < 0 || entry.receptacle_count <= 0)
                throw SchemaError("bad counts in spawn_table entry (" + rec + ", " + obj + ")");
            entry.p = std::min(1.0, static_cast<double>(entry.occurrences) / entry.receptacle_count);
            cat.spawn_table.entries[{rec, obj}] = entry;
            cat.spawn_table.objects_by_receptacle[rec].push_back(obj);
        }
        for (auto& [rec, objs] : cat.spawn_table.objects_by_receptacle)
            std::sort(objs.begin(), objs.end());

        if (doc.contains("semantic_asset_groups")) {
            for (const auto& js : doc.at("semantic_asset_groups")) {
                SagDef def = parse_sag(js);
                for (const auto& s : def.samplers)
                    for (const auto& cid : s.candidates) {
                        const AssetInstance* inst = cat.find_instance(cid);
                        if (!inst)
                            throw SchemaError("sag '" + def.id + "' sampler '" + s.id +
                                              "' references unknown instance '" + cid + "'");
                        if (inst->asset_type != s.asset_type)
                            throw SchemaError("sag '" + def.id + "' sampler '" + s.id +
                                              "' mixes asset types");
                    }
                cat.sags.push_back(std::move(def));
            }
            std::sort(cat.sags.begin(), cat.sags.end(),
                      [](const SagDef& a, const SagDef& b) { return a.id < b.id; });
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("catalog: ") + e.what());
    }
    return cat;
}

AssetCatalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open catalog file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_catalog_text(ss.str());
}

std::string serialize_catalog(const AssetCatalog& cat) {
    json doc;
    doc["schema_version"] = cat.schema_version;
    json jtypes = json::array();
    for (const auto& [name, t] : cat.types) {
        json jt;
        jt["name"] = t.name;
        jt["placeable_on_floor"] = t.placeable_on_floor;
        json pl = json::array();
        for (PlacementZone z : {PlacementZone::Edge, PlacementZone::Corner, PlacementZone::Middle})
            if (t.supports(z)) pl.push_back(to_string(z));
        jt["placements"] = pl;
        json rw;
        for (int i = 0; i < kRoomTypeCount; ++i)
            rw[to_string(static_cast<RoomType>(i))] = t.room_weights[i];
        jt["room_weights"] = rw;
        jt["allow_duplicates_in_room"] = t.allow_duplicates_in_room;
        jt["material_class"] = t.material_class;
        jt["color_randomizable"] = t.color_randomizable;
        json st = json::array();
        if (t.toggleable) st.push_back("toggleable");
        if (t.dirtyable) st.push_back("dirtyable");
        if (t.openable) st.push_back("openable");
        jt["states"] = st;
        jt["object_bias"] = t.object_bias;
        jt["receptacle_bias"] = t.receptacle_bias;
        if (!t.wall_placement.empty()) jt["wall_placement"] = t.wall_placement;
        if (!t.door_kind.empty()) jt["door_kind"] = t.door_kind;
        jtypes.push_back(jt);
    }
    doc["asset_types"] = jtypes;

    json jinsts = json::array();
    for (const auto& inst : cat.instances) {
        json ji;
        ji["id"] = inst.id;
        ji["asset_type"] = inst.asset_type;
        ji["bbox"] = {{"x", inst.bbox.x}, {"y", inst.bbox.y}, {"z", inst.bbox.z}};
        ji["split"] = to_string(inst.split);
        ji["is_receptacle"] = inst.is_receptacle;
        if (inst.wall_mountable) ji["wall_mountable"] = true;
        json vps = json::array();
        for (const Vec3& vp : inst.visibility_points) vps.push_back({vp.x, vp.y, vp.z});
        ji["visibility_points"] = vps;
        jinsts.push_back(ji);
    }
    doc["asset_instances"] = jinsts;

    json jm;
    json colors = json::array();
    for (const Rgb& c : cat.materials.solid_colors) colors.push_back({c[0], c[1], c[2]});
    jm["solid_colors"] = colors;
    jm["wall_textures"] = cat.materials.wall_textures;
    jm["floor_materials"] = cat.materials.floor_materials;
    jm["skyboxes"] = cat.materials.skyboxes;
    jm["object_materials"] = cat.materials.object_materials;
    doc["materials"] = jm;

    json jspawn = json::array();
    for (const auto& [key, entry] : cat.spawn_table.entries) {
        json je;
        je["receptacle"] = key.first;
        je["object"] = key.second;
        je["occurrences"] = entry.occurrences;
        je["receptacle_count"] = entry.receptacle_count;
        jspawn.push_back(je);
    }
    doc["spawn_table"] = jspawn;

    json jsags = json::array();
    for (const auto& def : cat.sags) {
        json js;
        js["id"] = def.id;
        json pl = json::array();
        for (PlacementZone z : {PlacementZone::Edge, PlacementZone::Corner, PlacementZone::Middle})
            if (def.supports(z)) pl.push_back(to_string(z));
        js["placements"] = pl;
        json rw;
        for (int i = 0; i < kRoomTypeCount; ++i)
            rw[to_string(static_cast<RoomType>(i))] = def.room_weights[i];
        js["room_weights"] = rw;
        json jsamps = json::array();
        for (const auto& s : def.samplers) {
            json jsamp;
            jsamp["id"] = s.id;
            jsamp["asset_type"] = s.asset_type;
            jsamp["candidates"] = s.candidates;
            jsamps.push_back(jsamp);
        }
        js["samplers"] = jsamps;
        json jedges = json::array();
        for (const auto& e : def.edges) {
            json je;
            je["parent"] = e.parent;
            je["child"] = e.child;
            je["anchor_v"] = to_string(e.anchor_v);
            je["anchor_h"] = to_string(e.anchor_h);
            je["pivot_v"] = to_string(e.pivot_v);
            je["pivot_h"] = to_string(e.pivot_h);
            je["offset"] = {e.offset.x, e.offset.z};
            je["rotation"] = e.rotation;
            je["on_top"] = e.on_top;
            je["allow_overlap"] = e.allow_overlap;
            jedges.push_back(je);
        }
        js["edges"] = jedges;
        js["links"] = def.links;
        jsags.push_back(js);
    }
    doc["semantic_asset_groups"] = jsags;

    return doc.dump(2);
}

}  // namespace prochouse
