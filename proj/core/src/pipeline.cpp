#include "prochouse/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <thread>

#include "json.hpp"
#include "prochouse/connectivity.hpp"
#include "prochouse/errors.hpp"
#include "prochouse/json_io.hpp"

namespace prochouse {

using nlohmann::json;

namespace {

// Fixed stage ids: every stage owns an rng stream, so adding draws to one
// stage cannot shift any other stage's distribution.
enum Stage : uint64_t {
    kStageBoundary = 1,
    kStageSubdivide,
    kStageScale,
    kStageConnections,
    kStageOpenings,
    kStageMaterials,
    kStageCeiling,
    kStageSkybox,
    kStageFurnish,
    kStageSurface,
    kStageAppearance,
    kStageStates,
    kStageSpecPick = 99,
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

House assemble(uint64_t seed, const RoomSpec& spec, const AssetCatalog& catalog,
               const PipelineConfig& config, uint64_t attempt_seed, StageTimes* times) {
    const auto t_layout = std::chrono::steady_clock::now();
    const int n_rooms = spec.room_count();

    Rng rng_boundary = Rng::stream(attempt_seed, kStageBoundary);
    InteriorBoundary boundary =
        sample_boundary(n_rooms, config.layout, rng_boundary,
                        spec.boundary_override ? &*spec.boundary_override : nullptr);
    boundary = apply_cuts(boundary, n_rooms, config.layout, rng_boundary);

    Rng rng_subdivide = Rng::stream(attempt_seed, kStageSubdivide);
    Rng rng_scale = Rng::stream(attempt_seed, kStageScale);
    Rng rng_conn = Rng::stream(attempt_seed, kStageConnections);
    Rng rng_open = Rng::stream(attempt_seed, kStageOpenings);

    // An infeasible connection plan or opening layout only needs a new plan on
    // the same boundary, not a whole new house.
    FloorPlan plan;
    std::vector<Wall> walls;
    std::vector<Opening> doors_and_frames;
    Opening exterior;
    const double scale_draw = rng_scale.uniform_real(config.layout.scale_min, config.layout.scale_max);
    bool planned = false;
    auto t_cursor = t_layout;
    for (int plan_try = 0; plan_try < 4 && !planned; ++plan_try) {
        plan = subdivide(boundary, spec, config.layout, rng_subdivide);
        plan.scale = scale_draw;
        if (times) times->layout += seconds_since(t_cursor);
        t_cursor = std::chrono::steady_clock::now();

        walls = extract_walls(plan);
        try {
            std::vector<Connection> connections =
                plan_connections(spec, plan, walls, catalog, config.split, rng_conn);
            for (Connection& conn : connections)
                conn.kind = choose_connection_kind(plan.rooms[conn.room_a].type,
                                                   plan.rooms[conn.room_b].type, rng_conn);
            doors_and_frames =
                place_openings(plan, walls, connections, catalog, config.split, rng_open);
            exterior =
                place_exterior_door(plan, walls, doors_and_frames, catalog, config.split, rng_open);
            planned = true;
        } catch (const ConnectivityInfeasible&) {
            if (plan_try == 3) throw;
        } catch (const PlacementExhausted&) {
            if (plan_try == 3) throw;
        }
        if (times) times->connect += seconds_since(t_cursor);
        t_cursor = std::chrono::steady_clock::now();
    }

    Rng rng_materials = Rng::stream(attempt_seed, kStageMaterials);
    const StructureMaterials structure =
        sample_structure_materials(plan, catalog.materials, config.dressing, rng_materials);
    Rng rng_ceiling = Rng::stream(attempt_seed, kStageCeiling);
    const double ceiling = sample_ceiling_height(config.dressing, rng_ceiling);
    Rng rng_skybox = Rng::stream(attempt_seed, kStageSkybox);
    const auto [skybox_id, time_of_day] =
        sample_skybox(catalog.materials, config.dressing, rng_skybox);

    House house;
    house.metadata.seed = seed;
    house.metadata.room_spec_id = spec.id;
    house.metadata.split = config.split;
    house.metadata.generator = kGeneratorVersion;
    house.boundary_width = plan.width_m();
    house.boundary_depth = plan.depth_m();
    house.plan_scale = plan.scale;
    house.ceiling_height = ceiling;
    house.structure = structure;
    house.walls = walls;

    for (const PlanRoom& room : plan.rooms) {
        RoomInfo info;
        info.id = room.id;
        info.type = room.type;
        info.floor_polygon = room.polygon.scaled(plan.scale);
        info.wall_material = structure.wall_material[room.id];
        info.wall_color = structure.wall_color[room.id];
        info.floor_material = structure.floor_material[room.id];
        house.rooms.push_back(std::move(info));
    }

    std::vector<Opening> all_openings = doors_and_frames;
    all_openings.push_back(exterior);
    for (const Opening& op : all_openings) {
        if (op.kind == OpeningKind::OpenWall)
            house.open_walls.push_back(op);
        else
            house.doors.push_back(op);
    }

    const auto t_furnish = std::chrono::steady_clock::now();
    IdGen ids;
    Rng rng_furnish = Rng::stream(attempt_seed, kStageFurnish);
    std::vector<SceneObject> wall_objects;
    for (const PlanRoom& room : plan.rooms) {
        std::vector<SceneObject> floor_objects = place_floor_objects(
            plan, room.id, walls, all_openings, catalog, config.split, config.furnish, ids,
            rng_furnish);
        std::vector<SceneObject> windows =
            place_windows(plan, room.id, walls, all_openings, floor_objects, catalog, config.split,
                          ceiling, config.furnish, ids, rng_furnish);
        std::vector<SceneObject> paintings = place_paintings(
            plan, room.id, walls, all_openings, floor_objects, windows, catalog, config.split,
            ceiling, config.furnish, ids, rng_furnish);
        std::vector<SceneObject> room_wall_objects = paintings;
        for (const SceneObject& w : windows) room_wall_objects.push_back(w);
        if (auto tv = place_television(plan, room.id, walls, all_openings, floor_objects,
                                       room_wall_objects, catalog, config.split, ceiling,
                                       config.furnish, ids, rng_furnish))
            wall_objects.push_back(std::move(*tv));
        for (SceneObject& o : floor_objects) house.objects.push_back(std::move(o));
        for (SceneObject& w : windows) house.windows.push_back(std::move(w));
        for (SceneObject& p : paintings) wall_objects.push_back(std::move(p));
    }
    for (SceneObject& o : wall_objects) house.objects.push_back(std::move(o));

    Rng rng_surface = Rng::stream(attempt_seed, kStageSurface);
    place_surface_objects(house, catalog, config.furnish, ids, rng_surface);

    if (config.appearance_randomization) {
        Rng rng_appearance = Rng::stream(attempt_seed, kStageAppearance);
        randomize_appearance(house, catalog, config.furnish, rng_appearance);
    }
    Rng rng_states = Rng::stream(attempt_seed, kStageStates);
    randomize_states(house, catalog, rng_states);

    house.lighting = place_lights(plan, house.objects, catalog, ceiling, skybox_id, time_of_day,
                                  config.dressing);
    if (times) times->furnish += seconds_since(t_furnish);
    return house;
}

}  // namespace

House generate_house(uint64_t seed, const RoomSpec& spec, const AssetCatalog& catalog,
                     const PipelineConfig& config, StageTimes* times) {
    for (int attempt = 0; attempt < config.max_retries; ++attempt) {
        const uint64_t attempt_seed = hash_mix(seed ^ hash_mix(static_cast<uint64_t>(attempt)));
        if (times) times->attempts++;
        House house;
        try {
            house = assemble(seed, spec, catalog, config, attempt_seed, times);
        } catch (const SubdivisionFailure&) {
            if (times) times->retry_subdivide++;
            continue;
        } catch (const ConnectivityInfeasible&) {
            if (times) times->retry_connectivity++;
            continue;
        } catch (const PlacementExhausted&) {
            if (times) times->retry_openings++;
            continue;
        }
        const auto t_validate = std::chrono::steady_clock::now();
        const ValidationReport report = validate_house(house, catalog, config.validate);
        if (times) times->validate += seconds_since(t_validate);
        if (report.pass) {
            house.metadata.retries = attempt;
            return house;
        }
        if (times) times->retry_validation++;
    }
    throw GenerationFailure("no valid house for spec '" + spec.id + "' after " +
                            std::to_string(config.max_retries) + " attempts");
}

uint64_t house_seed(uint64_t root_seed, int index) {
    return hash_mix(root_seed ^ hash_mix(static_cast<uint64_t>(index) + 0x51ed270b7a4eULL));
}

const RoomSpec& pick_spec_for_house(uint64_t seed, const std::vector<RoomSpec>& registry) {
    Rng rng = Rng::stream(seed, kStageSpecPick);
    return sample_room_spec(registry, rng);
}

std::string serialize_manifest(const DatasetManifest& m) {
    json doc;
    doc["rootSeed"] = m.root_seed;
    doc["generator"] = m.generator;
    doc["schemaVersion"] = m.schema_version;
    doc["split"] = m.split;
    json entries = json::array();
    for (const ManifestEntry& e : m.entries) {
        json je;
        je["index"] = e.index;
        je["seed"] = e.seed;
        je["roomSpecId"] = e.room_spec_id;
        je["file"] = e.file;
        entries.push_back(je);
    }
    doc["houses"] = entries;
    return doc.dump(2) + "\n";
}

DatasetManifest parse_manifest(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("manifest: ") + e.what());
    }
    DatasetManifest m;
    m.root_seed = doc.at("rootSeed").get<uint64_t>();
    m.generator = doc.at("generator").get<std::string>();
    m.schema_version = doc.at("schemaVersion").get<int>();
    m.split = doc.at("split").get<std::string>();
    for (const auto& je : doc.at("houses")) {
        ManifestEntry e;
        e.index = je.at("index").get<int>();
        e.seed = je.at("seed").get<uint64_t>();
        e.room_spec_id = je.at("roomSpecId").get<std::string>();
        e.file = je.at("file").get<std::string>();
        m.entries.push_back(e);
    }
    return m;
}

DatasetResult generate_dataset(const DatasetRequest& request,
                               const std::vector<RoomSpec>& registry,
                               const AssetCatalog& catalog) {
    const auto t0 = std::chrono::steady_clock::now();
    DatasetResult result;
    result.house_json.assign(request.count, {});
    result.manifest.root_seed = request.root_seed;
    result.manifest.generator = kGeneratorVersion;
    result.manifest.split = to_string(request.config.split);
    result.manifest.entries.resize(request.count);

    const int jobs = std::max(1, request.jobs);
    std::atomic<int> next{0};
    std::atomic<int> failures{0};
    std::vector<StageTimes> worker_times(jobs);

    auto worker = [&](int worker_id) {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= request.count) break;
            const uint64_t seed = house_seed(request.root_seed, i);
            const RoomSpec& spec = pick_spec_for_house(seed, registry);
            ManifestEntry entry;
            entry.index = i;
            entry.seed = seed;
            entry.room_spec_id = spec.id;
            entry.file = "house_" + std::to_string(i) + ".json";
            try {
                const House house =
                    generate_house(seed, spec, catalog, request.config, &worker_times[worker_id]);
                result.house_json[i] = emit_json(house);
            } catch (const GenerationFailure&) {
                failures.fetch_add(1);
                entry.file.clear();
            }
            result.manifest.entries[i] = entry;
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
        for (std::thread& t : threads) t.join();
    }

    for (const StageTimes& t : worker_times) result.times += t;
    result.failures = failures.load();
    result.wall_seconds = seconds_since(t0);

    if (!request.out_dir.empty()) {
        std::filesystem::create_directories(request.out_dir);
        for (const ManifestEntry& e : result.manifest.entries) {
            if (e.file.empty()) continue;
            std::ofstream out(std::filesystem::path(request.out_dir) / e.file, std::ios::binary);
            out << result.house_json[e.index];
        }
        std::ofstream mf(std::filesystem::path(request.out_dir) / "manifest.json", std::ios::binary);
        mf << serialize_manifest(result.manifest);
    }
    return result;
}

void DatasetStats::add_house(const House& house) {
    houses++;
    rooms_per_house[static_cast<int>(house.rooms.size())]++;
    double area = 0.0;
    for (const RoomInfo& r : house.rooms) area += r.floor_polygon.area();
    house_areas.push_back(area);

    std::map<int, int> per_room;
    for (const RoomInfo& r : house.rooms) per_room[r.id] = 0;
    house.for_each_object([&](const SceneObject& o) {
        per_room[o.room]++;
        objects_by_type[o.asset_type]++;
    });
    for (const auto& [room, count] : per_room) objects_per_room[count]++;
}

void DatasetStats::merge(const DatasetStats& other) {
    houses += other.houses;
    for (const auto& [k, v] : other.rooms_per_house) rooms_per_house[k] += v;
    for (const auto& [k, v] : other.objects_per_room) objects_per_room[k] += v;
    for (const auto& [k, v] : other.objects_by_type) objects_by_type[k] += v;
    house_areas.insert(house_areas.end(), other.house_areas.begin(), other.house_areas.end());
}

std::string DatasetStats::to_json() const {
    json doc;
    doc["houses"] = houses;
    json rph;
    for (const auto& [k, v] : rooms_per_house) rph[std::to_string(k)] = v;
    doc["roomsPerHouse"] = rph;
    json opr;
    for (const auto& [k, v] : objects_per_room) opr[std::to_string(k)] = v;
    doc["objectsPerRoom"] = opr;
    json obt;
    for (const auto& [k, v] : objects_by_type) obt[k] = v;
    doc["objectsByType"] = obt;
    double total_area = 0.0, max_area = 0.0;
    for (double a : house_areas) {
        total_area += a;
        max_area = std::max(max_area, a);
    }
    doc["meanHouseArea"] = house_areas.empty() ? 0.0 : total_area / house_areas.size();
    doc["maxHouseArea"] = max_area;
    // Area histogram in 25 m^2 buckets.
    json hist;
    std::map<int, int> buckets;
    for (double a : house_areas) buckets[static_cast<int>(a / 25.0)]++;
    for (const auto& [b, v] : buckets)
        hist[std::to_string(b * 25) + "-" + std::to_string((b + 1) * 25)] = v;
    doc["houseAreaHistogram"] = hist;
    return doc.dump(2) + "\n";
}

std::string BenchReport::to_json() const {
    json doc;
    doc["count"] = count;
    doc["jobs"] = jobs;
    doc["wallSeconds"] = wall_seconds;
    doc["housesPerSecond"] = houses_per_second;
    doc["retryRate"] = retry_rate;
    json stages;
    stages["layout"] = stage_seconds.layout;
    stages["connect"] = stage_seconds.connect;
    stages["furnish"] = stage_seconds.furnish;
    stages["validate"] = stage_seconds.validate;
    doc["stageSeconds"] = stages;
    doc["attempts"] = stage_seconds.attempts;
    json retries;
    retries["subdivide"] = stage_seconds.retry_subdivide;
    retries["connectivity"] = stage_seconds.retry_connectivity;
    retries["openings"] = stage_seconds.retry_openings;
    retries["validation"] = stage_seconds.retry_validation;
    doc["retriesByStage"] = retries;
    return doc.dump(2) + "\n";
}

BenchReport bench(int count, int jobs, const std::vector<RoomSpec>& registry,
                  const AssetCatalog& catalog, const PipelineConfig& config, uint64_t root_seed) {
    DatasetRequest request;
    request.count = count;
    request.root_seed = root_seed;
    request.jobs = jobs;
    request.config = config;
    const DatasetResult result = generate_dataset(request, registry, catalog);

    BenchReport report;
    report.count = count;
    report.jobs = jobs;
    report.wall_seconds = result.wall_seconds;
    report.houses_per_second = count / std::max(1e-9, result.wall_seconds);
    report.stage_seconds = result.times;
    const int attempts = std::max(1, result.times.attempts);
    report.retry_rate = static_cast<double>(attempts - count + result.failures) / attempts;
    return report;
}

}  // namespace prochouse
