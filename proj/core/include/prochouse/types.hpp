#pragma once

#include <array>
#include <optional>
#include <string>

namespace prochouse {

enum class RoomType { Bedroom, Bathroom, Kitchen, LivingRoom };
inline constexpr int kRoomTypeCount = 4;

const char* to_string(RoomType t);
std::optional<RoomType> room_type_from_string(const std::string& s);

enum class Split { Train, Val, Test, Any };
const char* to_string(Split s);
std::optional<Split> split_from_string(const std::string& s);

inline bool split_matches(Split instance, Split wanted) {
    return wanted == Split::Any || instance == Split::Any || instance == wanted;
}

// Where a floor object may sit relative to the room polygon.
enum class PlacementZone { Edge, Corner, Middle };
inline constexpr uint8_t placement_bit(PlacementZone z) { return uint8_t(1) << static_cast<int>(z); }
const char* to_string(PlacementZone z);
std::optional<PlacementZone> placement_zone_from_string(const std::string& s);

using Rgb = std::array<int, 3>;

}  // namespace prochouse
