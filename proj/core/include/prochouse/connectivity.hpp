#pragma once

#include <vector>

#include "prochouse/catalog.hpp"
#include "prochouse/house.hpp"
#include "prochouse/layout.hpp"
#include "prochouse/rng.hpp"

namespace prochouse {

// Every straight wall run of the scaled plan, interior walls once (between the
// two rooms), exterior walls once per bordering room. Stable order.
std::vector<Wall> extract_walls(const FloorPlan& plan);

struct Connection {
    int room_a = 0;  // room_a < room_b (interior pairs)
    int room_b = 0;
    OpeningKind kind = OpeningKind::Doorway;
};

// Picks which room pairs get connected: a spanning structure per zone of the
// spec, honoring avoid-door flags, one opening per pair at most.
std::vector<Connection> plan_connections(const RoomSpec& spec, const FloorPlan& plan,
                                         const std::vector<Wall>& walls,
                                         const AssetCatalog& catalog, Split split, Rng& rng);

// Kitchen <-> living room: open wall 0.375, door frame 0.375, doorway 0.25.
// Any pair touching a bedroom or bathroom always gets a doorway.
OpeningKind choose_connection_kind(RoomType a, RoomType b, Rng& rng);

// Places one opening per connection with rejection sampling so doorway swing
// boxes never overlap. Throws PlacementExhausted after max_attempts rejections
// on one connection.
std::vector<Opening> place_openings(const FloorPlan& plan, const std::vector<Wall>& walls,
                                    const std::vector<Connection>& connections,
                                    const AssetCatalog& catalog, Split split, Rng& rng,
                                    int max_attempts = 100);

// The permanently closed door to the outside, preferring kitchen and living
// room exterior walls.
Opening place_exterior_door(const FloorPlan& plan, const std::vector<Wall>& walls,
                            const std::vector<Opening>& existing, const AssetCatalog& catalog,
                            Split split, Rng& rng);

}  // namespace prochouse
