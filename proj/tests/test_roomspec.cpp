#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "prochouse/errors.hpp"
#include "prochouse/roomspec.hpp"

using namespace prochouse;

TEST_CASE("single-leaf spec parses") {
    const RoomSpec spec = parse_room_spec(
        R"({"id": "solo", "samplingWeight": 1, "root": {"kind": "room", "roomType": "bathroom", "growthWeight": 1}})");
    CHECK(spec.room_count() == 1);
    CHECK(spec.leaves()[0]->room_type == RoomType::Bathroom);
}

TEST_CASE("nested four-room tree parses with pre-order leaves") {
    const RoomSpec spec = parse_room_spec(R"({
        "id": "four", "samplingWeight": 1,
        "root": {"kind": "zone", "growthWeight": 1, "children": [
            {"kind": "zone", "growthWeight": 1, "children": [
                {"kind": "room", "roomType": "bedroom", "growthWeight": 3},
                {"kind": "room", "roomType": "bathroom", "growthWeight": 2, "avoidDoorToParent": true}]},
            {"kind": "zone", "growthWeight": 1, "children": [
                {"kind": "room", "roomType": "kitchen", "growthWeight": 2},
                {"kind": "room", "roomType": "living_room", "growthWeight": 3}]}]}})");
    const auto leaves = spec.leaves();
    REQUIRE(leaves.size() == 4);
    CHECK(leaves[0]->room_type == RoomType::Bedroom);
    CHECK(leaves[1]->room_type == RoomType::Bathroom);
    CHECK(leaves[1]->avoid_door_to_parent);
    CHECK(leaves[2]->room_type == RoomType::Kitchen);
    CHECK(leaves[3]->room_type == RoomType::LivingRoom);
}

TEST_CASE("degenerate zone with one child rejected") {
    CHECK_THROWS_AS(parse_room_spec(R"({
        "id": "bad", "samplingWeight": 1,
        "root": {"kind": "zone", "growthWeight": 1, "children": [
            {"kind": "room", "roomType": "kitchen", "growthWeight": 1}]}})"),
                    SchemaError);
}

TEST_CASE("non-positive growth weight rejected") {
    CHECK_THROWS_AS(parse_room_spec(R"({
        "id": "bad", "samplingWeight": 1,
        "root": {"kind": "room", "roomType": "kitchen", "growthWeight": 0}})"),
                    SchemaError);
}

TEST_CASE("parse then serialize is identity") {
    for (const RoomSpec& spec : helpers::shipped_specs()) {
        const std::string text = serialize_room_spec(spec);
        const RoomSpec reparsed = parse_room_spec(text);
        CHECK(serialize_room_spec(reparsed) == text);
        CHECK(reparsed.room_count() == spec.room_count());
    }
}

TEST_CASE("empty registry raises") {
    std::vector<RoomSpec> none;
    Rng rng(1);
    CHECK_THROWS_AS(sample_room_spec(none, rng), EmptyRegistry);
}

TEST_CASE("registry of one always returns that spec") {
    std::vector<RoomSpec> one{helpers::four_room_spec()};
    Rng rng(2);
    for (int i = 0; i < 50; ++i) CHECK(sample_room_spec(one, rng).id == "four_room_fixture");
}

TEST_CASE("weighted sampling frequencies") {
    RoomSpec a = helpers::four_room_spec();
    a.id = "a";
    RoomSpec b = helpers::four_room_spec();
    b.id = "b";

    SUBCASE("equal weights split evenly") {
        a.sampling_weight = 1;
        b.sampling_weight = 1;
        std::vector<RoomSpec> registry{a, b};
        Rng rng(3);
        int hits = 0;
        const int n = 100000;
        for (int i = 0; i < n; ++i)
            if (sample_room_spec(registry, rng).id == "a") hits++;
        CHECK(std::abs(hits / static_cast<double>(n) - 0.5) < 0.01);
    }
    SUBCASE("3:1 weights give 0.75") {
        a.sampling_weight = 3;
        b.sampling_weight = 1;
        std::vector<RoomSpec> registry{a, b};
        Rng rng(4);
        int hits = 0;
        const int n = 100000;
        for (int i = 0; i < n; ++i)
            if (sample_room_spec(registry, rng).id == "a") hits++;
        CHECK(std::abs(hits / static_cast<double>(n) - 0.75) < 0.01);
    }
}

TEST_CASE("shipped registry covers 1 through 10 rooms with 16 specs") {
    const auto& specs = helpers::shipped_specs();
    CHECK(specs.size() == 16);
    std::set<int> counts;
    for (const RoomSpec& spec : specs) {
        CHECK(spec.room_count() >= 1);
        CHECK(spec.room_count() <= 10);
        counts.insert(spec.room_count());
        CHECK(spec.sampling_weight > 0);
    }
    for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}) CHECK(counts.count(n) == 1);
}
