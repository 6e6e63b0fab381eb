#include "prochouse/types.hpp"

namespace prochouse {

const char* to_string(RoomType t) {
    switch (t) {
        case RoomType::Bedroom: return "bedroom";
        case RoomType::Bathroom: return "bathroom";
        case RoomType::Kitchen: return "kitchen";
        case RoomType::LivingRoom: return "living_room";
    }
    return "?";
}

std::optional<RoomType> room_type_from_string(const std::string& s) {
    if (s == "bedroom") return RoomType::Bedroom;
    if (s == "bathroom") return RoomType::Bathroom;
    if (s == "kitchen") return RoomType::Kitchen;
    if (s == "living_room") return RoomType::LivingRoom;
    return std::nullopt;
}

const char* to_string(Split s) {
    switch (s) {
        case Split::Train: return "train";
        case Split::Val: return "val";
        case Split::Test: return "test";
        case Split::Any: return "any";
    }
    return "?";
}

std::optional<Split> split_from_string(const std::string& s) {
    if (s == "train") return Split::Train;
    if (s == "val") return Split::Val;
    if (s == "test") return Split::Test;
    if (s == "any") return Split::Any;
    return std::nullopt;
}

const char* to_string(PlacementZone z) {
    switch (z) {
        case PlacementZone::Edge: return "edge";
        case PlacementZone::Corner: return "corner";
        case PlacementZone::Middle: return "middle";
    }
    return "?";
}

std::optional<PlacementZone> placement_zone_from_string(const std::string& s) {
    if (s == "edge") return PlacementZone::Edge;
    if (s == "corner") return PlacementZone::Corner;
    if (s == "middle") return PlacementZone::Middle;
    return std::nullopt;
}

}  // namespace prochouse
