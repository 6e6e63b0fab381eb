#include <benchmark/benchmark.h>

#include "helpers.hpp"
#include "prochouse/connectivity.hpp"
#include "prochouse/errors.hpp"
#include "prochouse/furnish.hpp"
#include "prochouse/json_io.hpp"
#include "prochouse/pipeline.hpp"
#include "prochouse/validate.hpp"

using namespace prochouse;

namespace {

const RoomSpec& spec_with_rooms(int n) {
    for (const RoomSpec& s : helpers::shipped_specs())
        if (s.room_count() == n) return s;
    return helpers::shipped_specs().front();
}

}  // namespace

static void BM_Subdivide(benchmark::State& state) {
    const RoomSpec& spec = spec_with_rooms(static_cast<int>(state.range(0)));
    GenParams params;
    Rng rng(1);
    InteriorBoundary boundary;
    const int dim = 3 * static_cast<int>(std::sqrt(double(state.range(0)))) + 1;
    boundary.inside = GridMask(dim, dim, true);
    for (auto _ : state) {
        try {
            benchmark::DoNotOptimize(subdivide(boundary, spec, params, rng));
        } catch (const SubdivisionFailure&) {
        }
    }
}
BENCHMARK(BM_Subdivide)->Arg(1)->Arg(4)->Arg(10);

static void BM_DecomposeOpenArea(benchmark::State& state) {
    OpenArea area;
    area.outer.pts = {{0, 0}, {8, 0}, {8, 6}, {5, 6}, {5, 8}, {0, 8}};
    Rng rng(2);
    for (int i = 0; i < state.range(0); ++i) {
        const double x = rng.uniform_real(0.5, 7.0);
        const double z = rng.uniform_real(0.5, 5.0);
        area.subtract({x, z, x + 0.8, z + 0.6});
    }
    for (auto _ : state) benchmark::DoNotOptimize(decompose_open_area(area));
}
BENCHMARK(BM_DecomposeOpenArea)->Arg(2)->Arg(8)->Arg(16);

static void BM_GenerateHouse(benchmark::State& state) {
    const RoomSpec& spec = spec_with_rooms(static_cast<int>(state.range(0)));
    PipelineConfig config;
    uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            generate_house(seed++, spec, helpers::shipped_catalog(), config));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_GenerateHouse)->Arg(1)->Arg(4)->Arg(7)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_ValidateHouse(benchmark::State& state) {
    PipelineConfig config;
    const House house =
        generate_house(7, spec_with_rooms(4), helpers::shipped_catalog(), config);
    for (auto _ : state)
        benchmark::DoNotOptimize(validate_house(house, helpers::shipped_catalog()));
}
BENCHMARK(BM_ValidateHouse);

static void BM_EmitJson(benchmark::State& state) {
    PipelineConfig config;
    const House house =
        generate_house(7, spec_with_rooms(7), helpers::shipped_catalog(), config);
    for (auto _ : state) benchmark::DoNotOptimize(emit_json(house));
}
BENCHMARK(BM_EmitJson);

BENCHMARK_MAIN();
