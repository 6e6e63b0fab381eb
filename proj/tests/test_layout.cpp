#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "prochouse/errors.hpp"
#include "prochouse/layout.hpp"

using namespace prochouse;

TEST_CASE("boundary dimension support follows the inward-rounded formula") {
    GenParams params;
    // n_r = 1: bounds (max(2, 1.5), 4.5) -> {2, 3, 4}
    CHECK(boundary_dim_support(1, params) == std::pair{2, 4});
    // n_r = 4: bounds (4.5, 7.5) -> {5, 6, 7}
    CHECK(boundary_dim_support(4, params) == std::pair{5, 7});

    Rng rng(1);
    std::set<int> seen;
    for (int i = 0; i < 4000; ++i) {
        const InteriorBoundary b = sample_boundary(4, params, rng);
        seen.insert(b.xs());
        seen.insert(b.zs());
        CHECK(b.xs() >= 2);
        CHECK(b.zs() >= 2);
    }
    CHECK(seen == std::set<int>{5, 6, 7});

    std::set<int> seen1;
    for (int i = 0; i < 4000; ++i) {
        const InteriorBoundary b = sample_boundary(1, params, rng);
        seen1.insert(b.xs());
        seen1.insert(b.zs());
    }
    CHECK(seen1 == std::set<int>{2, 3, 4});
}

TEST_CASE("boundary override wins") {
    GenParams params;
    BoundaryOverride ov{4, 6, 4, 6};
    Rng rng(2);
    for (int i = 0; i < 200; ++i) {
        const InteriorBoundary b = sample_boundary(1, params, rng, &ov);
        CHECK(b.xs() >= 4);
        CHECK(b.xs() <= 6);
    }
}

TEST_CASE("cut count stays within 0..10") {
    GenParams params;
    Rng rng(3);
    for (int n_r : {1, 4, 12}) {
        for (int i = 0; i < 20000; ++i) {
            const int n = sample_cut_count(n_r, params, rng);
            CHECK(n >= 0);
            CHECK(n <= 10);
        }
    }
}

TEST_CASE("cut count mean matches a Monte-Carlo oracle of the closed form") {
    // n_r = 12 -> Beta(6, 6), symmetric around 0.5, so the rounded mean sits
    // near 5. The oracle samples Beta by CDF inversion.
    GenParams params;
    Rng rng(4);
    const int n = 300000;
    double impl_sum = 0;
    for (int i = 0; i < n; ++i) impl_sum += sample_cut_count(12, params, rng);
    oracles::BetaOracle oracle(6.0, 6.0, 555);
    double oracle_sum = 0;
    for (int i = 0; i < n; ++i)
        oracle_sum += std::floor(10.0 * oracle.sample() + 0.5);
    CHECK(impl_sum / n == doctest::Approx(oracle_sum / n).epsilon(0.02 / 5.0));
}

TEST_CASE("single NE cut removes the expected cell") {
    GenParams params;
    InteriorBoundary b;
    b.inside = GridMask(5, 5, true);
    REQUIRE(apply_single_cut(b, 1, 1, 3, params));  // corner 3 = NE
    CHECK(b.inside.count() == 24);
    CHECK_FALSE(b.inside.at(4, 4));
    CHECK(b.inside.at(0, 0));
    CHECK(b.inside.at(3, 4));
}

TEST_CASE("cuts keep the boundary connected and nonempty") {
    GenParams params;
    Rng rng(5);
    for (int i = 0; i < 500; ++i) {
        InteriorBoundary b = sample_boundary(4, params, rng);
        b = apply_cuts(b, 4, params, rng);
        CHECK(b.inside.count() > 0);
        CHECK(mask_connected4(b.inside));
    }
}

TEST_CASE("disconnecting cuts are skipped and counted") {
    GenParams params;
    InteriorBoundary b;
    b.inside = GridMask(4, 4, true);
    REQUIRE(apply_single_cut(b, 2, 2, 2, params));  // NW block
    // SE cut of the same size would disconnect the remainder into two corners.
    CHECK_FALSE(apply_single_cut(b, 2, 2, 1, params));
    CHECK(b.cuts_skipped == 1);
    CHECK(mask_connected4(b.inside));
}

TEST_CASE("one-leaf spec claims the whole boundary") {
    RoomSpec spec;
    spec.id = "solo";
    spec.root = helpers::leaf(RoomType::Bathroom);
    GenParams params;
    Rng rng(6);
    InteriorBoundary b;
    b.inside = GridMask(4, 5, true);
    const FloorPlan plan = subdivide(b, spec, params, rng);
    REQUIRE(plan.rooms.size() == 1);
    CHECK(plan.rooms[0].cell_count == 20);
    CHECK(plan.rooms[0].type == RoomType::Bathroom);
}

TEST_CASE("four-room spec partitions a 6x6 boundary") {
    const RoomSpec spec = helpers::four_room_spec();
    GenParams params;
    Rng rng(7);
    InteriorBoundary b;
    b.inside = GridMask(6, 6, true);
    for (int trial = 0; trial < 50; ++trial) {
        const FloorPlan plan = subdivide(b, spec, params, rng);
        REQUIRE(plan.rooms.size() == 4);
        int total = 0;
        GridMask seen(6, 6);
        for (const PlanRoom& room : plan.rooms) {
            total += room.cell_count;
            CHECK(mask_connected4(room.cells));
            for (int z = 0; z < 6; ++z)
                for (int x = 0; x < 6; ++x)
                    if (room.cells.at(x, z)) {
                        CHECK_FALSE(seen.at(x, z));  // pairwise disjoint
                        seen.set(x, z, true);
                    }
        }
        CHECK(total == 36);  // exact partition
        CHECK(plan.rooms[0].type == RoomType::Bedroom);
        CHECK(plan.rooms[3].type == RoomType::LivingRoom);
    }
}

TEST_CASE("equal growth weights give balanced areas on average") {
    RoomSpec spec;
    spec.id = "pair";
    spec.root = helpers::zone({helpers::leaf(RoomType::Bedroom, 1), helpers::leaf(RoomType::LivingRoom, 1)});
    GenParams params;
    Rng rng(8);
    InteriorBoundary b;
    b.inside = GridMask(6, 6, true);
    double sum_a = 0, sum_b = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        const FloorPlan plan = subdivide(b, spec, params, rng);
        sum_a += plan.rooms[0].cell_count;
        sum_b += plan.rooms[1].cell_count;
    }
    const double ratio = sum_a / sum_b;
    CHECK(ratio > 0.8);
    CHECK(ratio < 1.25);
}

TEST_CASE("growth weights shift the mean area split") {
    RoomSpec spec;
    spec.id = "pair31";
    spec.root = helpers::zone({helpers::leaf(RoomType::Bedroom, 3), helpers::leaf(RoomType::Bathroom, 1)});
    GenParams params;
    Rng rng(9);
    InteriorBoundary b;
    b.inside = GridMask(6, 6, true);
    double sum_a = 0, sum_b = 0;
    for (int i = 0; i < 4000; ++i) {
        const FloorPlan plan = subdivide(b, spec, params, rng);
        sum_a += plan.rooms[0].cell_count;
        sum_b += plan.rooms[1].cell_count;
    }
    CHECK(sum_a > sum_b * 1.3);  // weight 3 room is clearly larger on average
}

TEST_CASE("boundary too small for the spec fails") {
    const RoomSpec spec = helpers::four_room_spec();
    GenParams params;
    params.min_room_cells = 4;
    Rng rng(10);
    InteriorBoundary b;
    b.inside = GridMask(3, 3, true);  // 9 cells < 4 rooms * 4 cells
    CHECK_THROWS_AS(subdivide(b, spec, params, rng), SubdivisionFailure);
}

TEST_CASE("scale sampling: range, mean, and invariance of area ratios") {
    GenParams params;
    Rng rng(11);
    double sum = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double s = rng.uniform_real(params.scale_min, params.scale_max);
        CHECK(s >= 1.6);
        CHECK(s < 2.2);
        sum += s;
    }
    CHECK(sum / n == doctest::Approx(1.9).epsilon(0.005 / 1.9));

    // 6x6 plan at s = 2 spans 12m, and scaling leaves area ratios alone.
    RoomSpec spec;
    spec.id = "pair";
    spec.root = helpers::zone({helpers::leaf(RoomType::Bedroom, 1), helpers::leaf(RoomType::Kitchen, 1)});
    InteriorBoundary b;
    b.inside = GridMask(6, 6, true);
    Rng rng2(12);
    FloorPlan plan = subdivide(b, spec, params, rng2);
    const double ratio_before =
        plan.rooms[0].polygon.area() / plan.rooms[1].polygon.area();
    plan.scale = 2.0;
    CHECK(plan.width_m() == doctest::Approx(12.0));
    CHECK(plan.depth_m() == doctest::Approx(12.0));
    const double ratio_after =
        plan.room_polygon_m(0).area() / plan.room_polygon_m(1).area();
    CHECK(ratio_after == doctest::Approx(ratio_before));
}

TEST_CASE("subdivision is deterministic in the rng seed") {
    const RoomSpec spec = helpers::four_room_spec();
    GenParams params;
    InteriorBoundary b;
    b.inside = GridMask(7, 7, true);
    Rng rng1(13), rng2(13);
    const FloorPlan p1 = subdivide(b, spec, params, rng1);
    const FloorPlan p2 = subdivide(b, spec, params, rng2);
    CHECK(p1.fingerprint() == p2.fingerprint());
}
