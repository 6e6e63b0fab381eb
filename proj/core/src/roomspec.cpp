#include "prochouse/roomspec.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "prochouse/errors.hpp"

namespace prochouse {

using nlohmann::json;

namespace {

void collect_leaves(const SpecNode& node, std::vector<const SpecNode*>& out) {
    if (node.is_leaf) {
        out.push_back(&node);
        return;
    }
    for (const SpecNode& c : node.children) collect_leaves(c, out);
}

SpecNode parse_node(const json& jn, const std::string& path) {
    SpecNode node;
    const std::string kind = jn.at("kind").get<std::string>();
    node.growth_weight = jn.value("growthWeight", 1.0);
    if (node.growth_weight <= 0) throw SchemaError("growthWeight must be positive at " + path);
    node.avoid_door_to_parent = jn.value("avoidDoorToParent", false);
    if (kind == "room") {
        node.is_leaf = true;
        auto rt = room_type_from_string(jn.at("roomType").get<std::string>());
        if (!rt) throw SchemaError("unknown roomType at " + path);
        node.room_type = *rt;
    } else if (kind == "zone") {
        if (!jn.contains("children") || jn.at("children").size() < 2)
            throw SchemaError("zone needs at least 2 children at " + path);
        int i = 0;
        for (const auto& jc : jn.at("children"))
            node.children.push_back(parse_node(jc, path + "/" + std::to_string(i++)));
    } else {
        throw SchemaError("node kind must be 'zone' or 'room' at " + path);
    }
    return node;
}

json node_to_json(const SpecNode& node) {
    json jn;
    if (node.is_leaf) {
        jn["kind"] = "room";
        jn["roomType"] = to_string(node.room_type);
    } else {
        jn["kind"] = "zone";
        json kids = json::array();
        for (const SpecNode& c : node.children) kids.push_back(node_to_json(c));
        jn["children"] = kids;
    }
    jn["growthWeight"] = node.growth_weight;
    if (node.avoid_door_to_parent) jn["avoidDoorToParent"] = true;
    return jn;
}

RoomSpec parse_spec_json(const json& js) {
    RoomSpec spec;
    spec.id = js.at("id").get<std::string>();
    spec.sampling_weight = js.value("samplingWeight", 1.0);
    if (spec.sampling_weight <= 0)
        throw SchemaError("samplingWeight must be positive in spec '" + spec.id + "'");
    spec.root = parse_node(js.at("root"), spec.id + "/root");
    if (js.contains("boundaryOverride")) {
        const auto& jb = js.at("boundaryOverride");
        BoundaryOverride bo;
        bo.x_min = jb.at("xMin").get<int>();
        bo.x_max = jb.at("xMax").get<int>();
        bo.z_min = jb.at("zMin").get<int>();
        bo.z_max = jb.at("zMax").get<int>();
        if (bo.x_min < 2 || bo.z_min < 2 || bo.x_max < bo.x_min || bo.z_max < bo.z_min)
            throw SchemaError("bad boundaryOverride in spec '" + spec.id + "'");
        spec.boundary_override = bo;
    }
    const int leaves = spec.room_count();
    if (leaves < 1) throw SchemaError("spec '" + spec.id + "' has no rooms");
    if (leaves > 10)
        throw SchemaError("spec '" + spec.id + "' has " + std::to_string(leaves) +
                          " rooms, max is 10");
    return spec;
}

}  // namespace

std::vector<const SpecNode*> RoomSpec::leaves() const {
    std::vector<const SpecNode*> out;
    collect_leaves(root, out);
    return out;
}

RoomSpec parse_room_spec(const std::string& text) {
    json js;
    try {
        js = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("room spec: ") + e.what());
    }
    try {
        return parse_spec_json(js);
    } catch (const json::exception& e) {
        throw ParseError(std::string("room spec: ") + e.what());
    }
}

std::string serialize_room_spec(const RoomSpec& spec) {
    json js;
    js["id"] = spec.id;
    js["samplingWeight"] = spec.sampling_weight;
    js["root"] = node_to_json(spec.root);
    if (spec.boundary_override) {
        js["boundaryOverride"] = {{"xMin", spec.boundary_override->x_min},
                                  {"xMax", spec.boundary_override->x_max},
                                  {"zMin", spec.boundary_override->z_min},
                                  {"zMax", spec.boundary_override->z_max}};
    }
    return js.dump(2);
}

std::vector<RoomSpec> parse_room_specs_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("room specs: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError("room specs file must be a JSON array");
    std::vector<RoomSpec> specs;
    for (const auto& js : doc) {
        try {
            specs.push_back(parse_spec_json(js));
        } catch (const json::exception& e) {
            throw ParseError(std::string("room specs: ") + e.what());
        }
    }
    return specs;
}

std::vector<RoomSpec> load_room_specs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open room specs file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_room_specs_text(ss.str());
}

const RoomSpec& sample_room_spec(const std::vector<RoomSpec>& registry, Rng& rng) {
    if (registry.empty()) throw EmptyRegistry();
    std::vector<double> weights;
    weights.reserve(registry.size());
    for (const RoomSpec& s : registry) weights.push_back(s.sampling_weight);
    return registry[rng.pick_weighted(weights)];
}

}  // namespace prochouse
