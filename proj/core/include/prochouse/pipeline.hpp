#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "prochouse/catalog.hpp"
#include "prochouse/dressing.hpp"
#include "prochouse/furnish.hpp"
#include "prochouse/house.hpp"
#include "prochouse/layout.hpp"
#include "prochouse/roomspec.hpp"
#include "prochouse/validate.hpp"

namespace prochouse {

inline constexpr const char* kGeneratorVersion = "prochouse-0.1.0";

struct PipelineConfig {
    GenParams layout;
    DressingParams dressing;
    FurnishParams furnish;
    ValidateParams validate;
    Split split = Split::Train;
    bool appearance_randomization = true;
    int max_retries = 25;  // whole-house resamples using the same room spec
};

struct StageTimes {
    double layout = 0.0;
    double connect = 0.0;
    double furnish = 0.0;
    double validate = 0.0;
    int attempts = 0;  // candidate houses built (1 = no retry)
    int retry_subdivide = 0;
    int retry_connectivity = 0;
    int retry_openings = 0;
    int retry_validation = 0;

    StageTimes& operator+=(const StageTimes& o) {
        layout += o.layout;
        connect += o.connect;
        furnish += o.furnish;
        validate += o.validate;
        attempts += o.attempts;
        retry_subdivide += o.retry_subdivide;
        retry_connectivity += o.retry_connectivity;
        retry_openings += o.retry_openings;
        retry_validation += o.retry_validation;
        return *this;
    }
};

// Full stage chain with retries: layout -> connections -> dressing -> floor,
// wall, surface objects -> randomization -> lights -> validation. Failing
// candidates are resampled from the same room spec; throws GenerationFailure
// when max_retries candidates all fail.
House generate_house(uint64_t seed, const RoomSpec& spec, const AssetCatalog& catalog,
                     const PipelineConfig& config, StageTimes* times = nullptr);

struct ManifestEntry {
    int index = 0;
    uint64_t seed = 0;
    std::string room_spec_id;
    std::string file;
};

struct DatasetManifest {
    uint64_t root_seed = 0;
    std::string generator;
    int schema_version = kHouseSchemaVersion;
    std::string split;
    std::vector<ManifestEntry> entries;
};

std::string serialize_manifest(const DatasetManifest& manifest);
DatasetManifest parse_manifest(const std::string& text);

// Seed of house #index under a dataset root seed.
uint64_t house_seed(uint64_t root_seed, int index);
// The room spec a house draws for itself (a fixed side stream of its seed).
const RoomSpec& pick_spec_for_house(uint64_t seed, const std::vector<RoomSpec>& registry);

struct DatasetRequest {
    int count = 1;
    uint64_t root_seed = 0;
    int jobs = 1;
    PipelineConfig config;
    std::string out_dir;  // empty: keep houses in memory only
};

struct DatasetResult {
    DatasetManifest manifest;
    std::vector<std::string> house_json;  // canonical bytes, by index
    StageTimes times;
    double wall_seconds = 0.0;
    int failures = 0;  // houses that exhausted the retry budget
};

// Generates `count` houses across `jobs` workers. House content depends only
// on (root_seed, index), so worker count never changes the output.
DatasetResult generate_dataset(const DatasetRequest& request,
                               const std::vector<RoomSpec>& registry, const AssetCatalog& catalog);

struct DatasetStats {
    int houses = 0;
    std::map<int, int> rooms_per_house;
    std::map<int, int> objects_per_room;
    std::map<std::string, int> objects_by_type;
    std::vector<double> house_areas;

    void add_house(const House& house);
    void merge(const DatasetStats& other);
    std::string to_json() const;
};

struct BenchReport {
    int count = 0;
    int jobs = 1;
    double wall_seconds = 0.0;
    double houses_per_second = 0.0;
    double retry_rate = 0.0;  // extra attempts / total attempts
    StageTimes stage_seconds;  // summed across workers
    std::string to_json() const;
};

BenchReport bench(int count, int jobs, const std::vector<RoomSpec>& registry,
                  const AssetCatalog& catalog, const PipelineConfig& config, uint64_t root_seed = 7);

}  // namespace prochouse
