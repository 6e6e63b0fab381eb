#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prochouse/catalog.hpp"
#include "prochouse/errors.hpp"
#include "prochouse/json_io.hpp"
#include "prochouse/pipeline.hpp"
#include "prochouse/roomspec.hpp"
#include "prochouse/svg.hpp"
#include "prochouse/validate.hpp"

namespace fs = std::filesystem;
using namespace prochouse;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitInputError = 2;

std::vector<fs::path> house_files(const std::string& in) {
    std::vector<fs::path> files;
    const fs::path p(in);
    if (fs::is_directory(p)) {
        for (const auto& entry : fs::directory_iterator(p)) {
            const std::string name = entry.path().filename().string();
            if (entry.path().extension() == ".json" && name != "manifest.json" &&
                name.rfind("stats", 0) != 0)
                files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
    } else {
        files.push_back(p);
    }
    return files;
}

uint64_t effective_seed(uint64_t cli_seed) {
    if (const char* env = std::getenv("PROCHOUSE_SEED")) return std::strtoull(env, nullptr, 10);
    return cli_seed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prochouse: procedural interactive house generator"};
    app.require_subcommand(1);

    std::string catalog_path = "data/catalog.json";
    std::string specs_path = "data/room_specs.json";

    // gen
    auto* gen = app.add_subcommand("gen", "generate a dataset of houses");
    int gen_count = 1;
    uint64_t gen_seed = 0;
    std::string gen_split = "train";
    std::string gen_out = "out";
    int gen_jobs = 1;
    bool no_material_rand = false;
    gen->add_option("--count", gen_count, "number of houses");
    gen->add_option("--seed", gen_seed, "root seed (env PROCHOUSE_SEED overrides)");
    gen->add_option("--room-specs", specs_path, "room spec registry file");
    gen->add_option("--catalog", catalog_path, "asset catalog file");
    gen->add_option("--split", gen_split, "asset split")->check(CLI::IsMember({"train", "val", "test"}));
    gen->add_option("--out", gen_out, "output directory");
    gen->add_option("--jobs", gen_jobs, "worker threads");
    gen->add_flag("--no-material-rand", no_material_rand, "disable color/material randomization");

    // validate
    auto* validate = app.add_subcommand("validate", "validate generated houses");
    std::string val_in;
    std::string val_report;
    validate->add_option("--in", val_in, "house file or directory")->required();
    validate->add_option("--report", val_report, "write a JSON report here");
    validate->add_option("--catalog", catalog_path, "asset catalog file");

    // render
    auto* render = app.add_subcommand("render", "render a house to SVG");
    std::string render_in;
    std::string render_svg_out;
    render->add_option("--in", render_in, "house JSON file")->required();
    render->add_option("--svg", render_svg_out, "output SVG path")->required();
    render->add_option("--catalog", catalog_path, "asset catalog file");

    // stats
    auto* stats = app.add_subcommand("stats", "dataset statistics");
    std::string stats_in;
    std::string stats_out;
    stats->add_option("--in", stats_in, "dataset directory")->required();
    stats->add_option("--json", stats_out, "output JSON path");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "generation throughput benchmark");
    int bench_count = 100;
    int bench_jobs = 1;
    bench_cmd->add_option("--count", bench_count, "houses to generate");
    bench_cmd->add_option("--jobs", bench_jobs, "worker threads");
    bench_cmd->add_option("--room-specs", specs_path, "room spec registry file");
    bench_cmd->add_option("--catalog", catalog_path, "asset catalog file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            const AssetCatalog catalog = load_catalog(catalog_path);
            const std::vector<RoomSpec> registry = load_room_specs(specs_path);
            DatasetRequest request;
            request.count = gen_count;
            request.root_seed = effective_seed(gen_seed);
            request.jobs = gen_jobs;
            request.out_dir = gen_out;
            request.config.split = *split_from_string(gen_split);
            request.config.appearance_randomization = !no_material_rand;
            const DatasetResult result = generate_dataset(request, registry, catalog);
            std::cout << "generated " << (gen_count - result.failures) << "/" << gen_count
                      << " houses in " << result.wall_seconds << "s ("
                      << gen_count / std::max(1e-9, result.wall_seconds) << " houses/s), "
                      << result.times.attempts - gen_count + result.failures << " retries -> "
                      << gen_out << "\n";
            return result.failures == 0 ? kExitOk : kExitValidationFailure;
        }

        if (validate->parsed()) {
            const AssetCatalog catalog = load_catalog(catalog_path);
            int failed = 0;
            std::string report_json = "[\n";
            bool first = true;
            for (const fs::path& file : house_files(val_in)) {
                const House house = load_house(file.string());
                const auto t0 = std::chrono::steady_clock::now();
                const ValidationReport report = validate_house(house, catalog);
                const double secs =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                if (!report.pass) {
                    ++failed;
                    std::cout << file.string() << ": FAIL";
                    for (const std::string& reason : report.failures) std::cout << " [" << reason << "]";
                    std::cout << "\n";
                } else {
                    std::cout << file.string() << ": ok\n";
                }
                if (!first) report_json += ",\n";
                first = false;
                std::string counts;
                for (size_t r = 0; r < report.per_room_reachable.size(); ++r)
                    counts += (r ? ", " : "") + std::to_string(report.per_room_reachable[r]);
                char secs_buf[32];
                std::snprintf(secs_buf, sizeof(secs_buf), "%.6f", secs);
                report_json += "  {\"file\": \"" + file.filename().string() +
                               "\", \"pass\": " + (report.pass ? "true" : "false") +
                               ", \"reachablePerRoom\": [" + counts + "], \"seconds\": " +
                               secs_buf + "}";
            }
            report_json += "\n]\n";
            if (!val_report.empty()) {
                std::ofstream out(val_report);
                out << report_json;
            }
            return failed == 0 ? kExitOk : kExitValidationFailure;
        }

        if (render->parsed()) {
            const AssetCatalog catalog = load_catalog(catalog_path);
            const House house = load_house(render_in);
            std::ofstream out(render_svg_out, std::ios::binary);
            if (!out) {
                std::cerr << "cannot write " << render_svg_out << "\n";
                return kExitInputError;
            }
            out << render_svg(house, catalog);
            return kExitOk;
        }

        if (stats->parsed()) {
            DatasetStats all;
            for (const fs::path& file : house_files(stats_in)) all.add_house(load_house(file.string()));
            const std::string json = all.to_json();
            if (stats_out.empty()) {
                std::cout << json;
            } else {
                std::ofstream out(stats_out, std::ios::binary);
                out << json;
            }
            return kExitOk;
        }

        if (bench_cmd->parsed()) {
            const AssetCatalog catalog = load_catalog(catalog_path);
            const std::vector<RoomSpec> registry = load_room_specs(specs_path);
            PipelineConfig config;
            const BenchReport report = bench(bench_count, bench_jobs, registry, catalog, config);
            std::cout << report.to_json();
            return kExitOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidationFailure;
    }
    return kExitOk;
}
