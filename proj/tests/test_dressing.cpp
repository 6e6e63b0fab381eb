#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "prochouse/dressing.hpp"

using namespace prochouse;

TEST_CASE("structure material flags match their Bernoulli parameters") {
    const FloorPlan plan = helpers::plan_from_grid(
        4, 2, {0, 0, 1, 1, 0, 0, 1, 1}, {RoomType::Kitchen, RoomType::LivingRoom}, 2.0);
    const MaterialCatalog& materials = helpers::shipped_catalog().materials;
    DressingParams params;
    Rng rng(1);
    int same = 0, solid = 0, solid_draws = 0, floors_same = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const StructureMaterials m = sample_structure_materials(plan, materials, params, rng);
        if (m.walls_same) {
            same++;
            CHECK(m.wall_material[0] == m.wall_material[1]);
            CHECK(m.ceiling_material == m.wall_material[0]);
        } else {
            for (int r = 0; r < 2; ++r) {
                solid_draws++;
                if (m.wall_solid[r]) solid++;
            }
        }
        if (m.floors_same) {
            floors_same++;
            CHECK(m.floor_material[0] == m.floor_material[1]);
        }
        if (m.wall_solid[0]) {
            CHECK(m.wall_color[0].has_value());
        } else {
            CHECK_FALSE(m.wall_color[0].has_value());
        }
    }
    CHECK(same / static_cast<double>(n) == doctest::Approx(0.35).epsilon(0.029));
    CHECK(solid / static_cast<double>(solid_draws) == doctest::Approx(0.5).epsilon(0.02));
    CHECK(floors_same / static_cast<double>(n) == doctest::Approx(0.15).epsilon(0.067));
}

TEST_CASE("ceiling height: support and mean") {
    DressingParams params;
    Rng rng(2);
    double sum = 0;
    const int n = 300000;
    for (int i = 0; i < n; ++i) {
        const double h = sample_ceiling_height(params, rng);
        CHECK(h >= 2.5);
        CHECK(h < 7.0);
        sum += h;
    }
    // 2.5 + 4.5 * 1.25/6.75
    CHECK(sum / n == doctest::Approx(3.3333).epsilon(0.01 / 3.33));
}

TEST_CASE("ceiling height histogram matches the oracle within TV 0.01") {
    DressingParams params;
    Rng rng(3);
    oracles::BetaOracle oracle(1.25, 5.5, 77);
    std::map<int, long long> impl_hist, oracle_hist;
    const int n = 400000;
    for (int i = 0; i < n; ++i) {
        impl_hist[static_cast<int>((sample_ceiling_height(params, rng) - 2.5) / 0.25)]++;
        oracle_hist[static_cast<int>((4.5 * oracle.sample()) / 0.25)]++;
    }
    CHECK(oracles::tv_distance(impl_hist, oracle_hist) < 0.01);
}

TEST_CASE("skybox sampling is uniform over the 22 shipped skyboxes") {
    const MaterialCatalog& materials = helpers::shipped_catalog().materials;
    DressingParams params;
    Rng rng(4);
    std::map<std::string, int> counts;
    int midday = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const auto [id, tod] = sample_skybox(materials, params, rng);
        counts[id]++;
        if (tod == "midday") {
            midday++;
            CHECK(id.rfind("sky_midday", 0) == 0);  // time-of-day tag consistent
        }
    }
    CHECK(counts.size() == 22);  // every skybox drawn
    CHECK(midday / static_cast<double>(n) == doctest::Approx(16.0 / 22.0).epsilon(0.014));

    // Group weights reshape the draw.
    DressingParams weighted;
    weighted.skybox_group_weights["midday"] = 0.0;
    for (int i = 0; i < 2000; ++i) {
        const auto [id, tod] = sample_skybox(materials, weighted, rng);
        CHECK(tod != "midday");
    }
}

TEST_CASE("room lights: one per room at an interior point, plus the sun") {
    const FloorPlan plan = helpers::plan_from_grid(
        4, 2, {0, 0, 1, 1, 0, 0, 1, 1},
        {RoomType::Kitchen, RoomType::LivingRoom}, 2.0);
    DressingParams params;
    const Lighting lighting =
        place_lights(plan, {}, helpers::shipped_catalog(), 3.0, "sky_midday_01", "midday", params);
    CHECK(lighting.point_lights.size() == 2);
    for (const PointLight& pl : lighting.point_lights) {
        const Polygon poly = plan.rooms[pl.room].polygon.scaled(plan.scale);
        CHECK(poly.contains({pl.position.x, pl.position.z}));
        CHECK(pl.position.y == doctest::Approx(3.0 - params.light_drop));
    }
    CHECK(lighting.directional.intensity > 0);
    CHECK(lighting.skybox_id == "sky_midday_01");
}

TEST_CASE("L-shaped room light stays inside the polygon") {
    // U-shaped room whose centroid falls outside the region.
    // Room 0 wraps around a notch cut from the north edge.
    std::vector<int> owners = {
        0, 0, 0, 0, 0,
        0, 0, 0, 0, 0,
        0, -1, -1, -1, 0,
    };
    const FloorPlan plan =
        helpers::plan_from_grid(5, 3, owners, {RoomType::LivingRoom}, 2.0);
    DressingParams params;
    const Lighting lighting =
        place_lights(plan, {}, helpers::shipped_catalog(), 2.8, "sky_blue_01", "blue_hour", params);
    REQUIRE(lighting.point_lights.size() == 1);
    const Polygon poly = plan.rooms[0].polygon.scaled(plan.scale);
    CHECK(poly.contains({lighting.point_lights[0].position.x, lighting.point_lights[0].position.z}));
    // Blue hour dims the sun.
    CHECK(lighting.directional.intensity < 0.5);
}

TEST_CASE("lamp objects add point lights that follow their state") {
    const FloorPlan plan = helpers::one_room_plan(4, 4, 2.0);
    const AssetCatalog& cat = helpers::shipped_catalog();
    const auto lamps = cat.instances_of_type("floor_lamp", Split::Any);
    REQUIRE(!lamps.empty());
    std::vector<SceneObject> objects;
    for (int i = 0; i < 2; ++i) {
        SceneObject lamp;
        lamp.id = "obj_" + std::to_string(i);
        lamp.asset_id = lamps[0]->id;
        lamp.asset_type = "floor_lamp";
        lamp.position = {2.0 + i, 0.0, 2.0};
        lamp.room = 0;
        lamp.states["on"] = i == 0 ? "true" : "false";
        objects.push_back(lamp);
    }
    DressingParams params;
    const Lighting lighting =
        place_lights(plan, objects, cat, 3.0, "sky_midday_02", "midday", params);
    CHECK(lighting.point_lights.size() == 3);  // 1 room + 2 lamps
    double on_intensity = -1, off_intensity = -1;
    for (const PointLight& pl : lighting.point_lights) {
        if (pl.object_id == "obj_0") on_intensity = pl.intensity;
        if (pl.object_id == "obj_1") off_intensity = pl.intensity;
    }
    CHECK(on_intensity > 0);
    CHECK(off_intensity == doctest::Approx(0.0));
}
