#include "prochouse/connectivity.hpp"

#include <algorithm>
#include <numeric>

#include "prochouse/errors.hpp"

namespace prochouse {

std::vector<Wall> extract_walls(const FloorPlan& plan) {
    const int xs = plan.boundary.xs();
    const int zs = plan.boundary.zs();
    const double s = plan.scale;
    std::vector<Wall> walls;
    int next_id = 0;

    auto room_at = [&](int x, int z) -> int {
        if (!plan.boundary.inside.at(x, z)) return kExterior;
        return plan.room_of_cell(x, z);
    };

    // Vertical walls: along z at integer x lines.
    for (int x = 0; x <= xs; ++x) {
        int run_start = -1, run_neg = kExterior, run_pos = kExterior;
        for (int z = 0; z <= zs; ++z) {
            const int neg = z < zs ? room_at(x - 1, z) : kExterior;
            const int pos = z < zs ? room_at(x, z) : kExterior;
            const bool is_wall = z < zs && neg != pos;
            if (is_wall && run_start >= 0 && neg == run_neg && pos == run_pos) continue;
            if (run_start >= 0) {
                walls.push_back({next_id++, 'z', x * s, run_start * s, z * s, run_neg, run_pos});
                run_start = -1;
            }
            if (is_wall) {
                run_start = z;
                run_neg = neg;
                run_pos = pos;
            }
        }
    }
    // Horizontal walls: along x at integer z lines.
    for (int z = 0; z <= zs; ++z) {
        int run_start = -1, run_neg = kExterior, run_pos = kExterior;
        for (int x = 0; x <= xs; ++x) {
            const int neg = x < xs ? room_at(x, z - 1) : kExterior;
            const int pos = x < xs ? room_at(x, z) : kExterior;
            const bool is_wall = x < xs && neg != pos;
            if (is_wall && run_start >= 0 && neg == run_neg && pos == run_pos) continue;
            if (run_start >= 0) {
                walls.push_back({next_id++, 'x', z * s, run_start * s, x * s, run_neg, run_pos});
                run_start = -1;
            }
            if (is_wall) {
                run_start = x;
                run_neg = neg;
                run_pos = pos;
            }
        }
    }
    return walls;
}

namespace {

double longest_shared_wall(const std::vector<Wall>& walls, int a, int b) {
    double best = 0.0;
    for (const Wall& w : walls)
        if ((w.room_neg == a && w.room_pos == b) || (w.room_neg == b && w.room_pos == a))
            best = std::max(best, w.length());
    return best;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Leaves under `node` in pre-order, as plan room ids.
void subtree_rooms(const SpecNode& node, int& next_leaf, std::vector<int>& out,
                   std::vector<const SpecNode*>& leaf_nodes) {
    if (node.is_leaf) {
        out.push_back(next_leaf);
        leaf_nodes.push_back(&node);
        ++next_leaf;
        return;
    }
    for (const SpecNode& c : node.children) subtree_rooms(c, next_leaf, out, leaf_nodes);
}

struct ZonePlanner {
    const std::vector<Wall>& walls;
    double min_door;
    Rng& rng;
    std::vector<Connection>& out;

    // Rooms that may represent their subtree for an edge decided at an
    // ancestor zone. Flagged leaves only connect within their parent zone.
    static std::vector<int> representatives(const SpecNode& child, int first_leaf) {
        std::vector<int> rooms;
        std::vector<const SpecNode*> nodes;
        int next = first_leaf;
        subtree_rooms(child, next, rooms, nodes);
        if (child.is_leaf) return rooms;
        std::vector<int> repr;
        for (size_t i = 0; i < rooms.size(); ++i)
            if (!nodes[i]->avoid_door_to_parent) repr.push_back(rooms[i]);
        return repr;
    }

    std::vector<std::pair<int, int>> feasible_pairs(const std::vector<int>& ra,
                                                    const std::vector<int>& rb) const {
        std::vector<std::pair<int, int>> pairs;
        for (int a : ra)
            for (int b : rb)
                if (longest_shared_wall(walls, a, b) >= min_door) pairs.push_back({a, b});
        return pairs;
    }

    void plan_zone(const SpecNode& zone, int first_leaf) {
        if (zone.is_leaf) return;
        const int k = static_cast<int>(zone.children.size());
        std::vector<int> child_first(k);
        std::vector<std::vector<int>> child_repr(k);
        int next = first_leaf;
        for (int i = 0; i < k; ++i) {
            child_first[i] = next;
            std::vector<int> rooms;
            std::vector<const SpecNode*> nodes;
            subtree_rooms(zone.children[i], next, rooms, nodes);
            child_repr[i] = representatives(zone.children[i], child_first[i]);
        }

        // Children that are flagged leaves attach last so they end up with a
        // single connection.
        std::vector<int> core, deferred;
        for (int i = 0; i < k; ++i) {
            const SpecNode& c = zone.children[i];
            (c.is_leaf && c.avoid_door_to_parent ? deferred : core).push_back(i);
        }
        if (core.empty()) {
            core = deferred;
            deferred.clear();
        }

        auto add_edge = [&](int i, int j) {
            auto pairs = feasible_pairs(child_repr[i], child_repr[j]);
            if (pairs.empty())
                throw ConnectivityInfeasible("no adjacent room pair between zone children");
            auto [a, b] = pairs[static_cast<size_t>(
                rng.uniform_int(0, static_cast<int64_t>(pairs.size()) - 1))];
            Connection c;
            c.room_a = std::min(a, b);
            c.room_b = std::max(a, b);
            out.push_back(c);
        };

        // Random spanning tree over the core children.
        std::vector<std::pair<int, int>> candidate_edges;
        for (size_t i = 0; i < core.size(); ++i)
            for (size_t j = i + 1; j < core.size(); ++j)
                if (!feasible_pairs(child_repr[core[i]], child_repr[core[j]]).empty())
                    candidate_edges.push_back({core[i], core[j]});
        rng.shuffle(candidate_edges);
        UnionFind uf(k);
        int joined = 1;
        for (auto [i, j] : candidate_edges) {
            if (joined == static_cast<int>(core.size())) break;
            if (uf.unite(i, j)) {
                add_edge(i, j);
                ++joined;
            }
        }
        if (joined != static_cast<int>(core.size()))
            throw ConnectivityInfeasible("zone children are not mutually reachable");

        // Attach each deferred (flagged) child by exactly one edge.
        for (int i : deferred) {
            std::vector<int> options;
            for (int j : core)
                if (!feasible_pairs(child_repr[i], child_repr[j]).empty()) options.push_back(j);
            if (options.empty())
                throw ConnectivityInfeasible("flagged room has no neighbor in its zone");
            const int j = options[static_cast<size_t>(
                rng.uniform_int(0, static_cast<int64_t>(options.size()) - 1))];
            add_edge(i, j);
        }

        for (int i = 0; i < k; ++i) plan_zone(zone.children[i], child_first[i]);
    }
};

}  // namespace

std::vector<Connection> plan_connections(const RoomSpec& spec, const FloorPlan& plan,
                                         const std::vector<Wall>& walls,
                                         const AssetCatalog& catalog, Split split, Rng& rng) {
    std::vector<Connection> out;
    if (plan.rooms.size() <= 1) return out;
    ZonePlanner planner{walls, catalog.min_door_width(split), rng, out};
    planner.plan_zone(spec.root, 0);

    // One opening per pair at most.
    std::sort(out.begin(), out.end(), [](const Connection& a, const Connection& b) {
        return std::tie(a.room_a, a.room_b) < std::tie(b.room_a, b.room_b);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Connection& a, const Connection& b) {
                              return a.room_a == b.room_a && a.room_b == b.room_b;
                          }),
              out.end());
    return out;
}

OpeningKind choose_connection_kind(RoomType a, RoomType b, Rng& rng) {
    const bool kitchen_living = (a == RoomType::Kitchen && b == RoomType::LivingRoom) ||
                                (a == RoomType::LivingRoom && b == RoomType::Kitchen);
    if (!kitchen_living) return OpeningKind::Doorway;
    const double u = rng.uniform();
    if (u < 0.375) return OpeningKind::OpenWall;
    if (u < 0.75) return OpeningKind::DoorFrame;
    return OpeningKind::Doorway;
}

namespace {

std::vector<const Wall*> shared_walls(const std::vector<Wall>& walls, int a, int b) {
    std::vector<const Wall*> out;
    for (const Wall& w : walls)
        if ((w.room_neg == a && w.room_pos == b) || (w.room_neg == b && w.room_pos == a))
            out.push_back(&w);
    return out;
}

const Wall* pick_wall_by_length(const std::vector<const Wall*>& candidates, Rng& rng) {
    std::vector<double> weights;
    for (const Wall* w : candidates) weights.push_back(w->length());
    return candidates[rng.pick_weighted(weights)];
}

}  // namespace

std::vector<Opening> place_openings(const FloorPlan& plan, const std::vector<Wall>& walls,
                                    const std::vector<Connection>& connections,
                                    const AssetCatalog& catalog, Split split, Rng& rng,
                                    int max_attempts) {
    std::vector<Opening> openings;
    std::vector<Rect> swings;
    int next_id = 0;

    for (const Connection& conn : connections) {
        const auto candidates = shared_walls(walls, conn.room_a, conn.room_b);
        if (candidates.empty())
            throw PlacementExhausted("connected rooms share no wall");

        if (conn.kind == OpeningKind::OpenWall) {
            const Wall* best = candidates[0];
            for (const Wall* w : candidates)
                if (w->length() > best->length()) best = w;
            Opening op;
            op.id = next_id++;
            op.kind = OpeningKind::OpenWall;
            op.wall = best->id;
            op.room_a = conn.room_a;
            op.room_b = conn.room_b;
            op.offset = 0.0;
            op.width = best->length();
            openings.push_back(op);
            continue;
        }

        const char* kind_name = conn.kind == OpeningKind::Doorway ? "doorway" : "door_frame";
        const auto door_pool = catalog.door_assets(kind_name, split);

        bool placed = false;
        for (int attempt = 0; attempt < max_attempts && !placed; ++attempt) {
            const Wall* wall = pick_wall_by_length(candidates, rng);
            // Doors wider than the wall (double doors on short walls) drop out.
            std::vector<const AssetInstance*> fitting;
            for (const AssetInstance* d : door_pool)
                if (d->bbox.x <= wall->length()) fitting.push_back(d);
            if (fitting.empty()) continue;
            const AssetInstance* door = rng.pick(fitting);
            const double offset = rng.uniform_real(0.0, wall->length() - door->bbox.x);

            Opening op;
            op.id = next_id;
            op.kind = conn.kind;
            op.wall = wall->id;
            op.room_a = conn.room_a;
            op.room_b = conn.room_b;
            op.asset_id = door->id;
            op.offset = offset;
            op.width = door->bbox.x;
            if (conn.kind == OpeningKind::Doorway) {
                op.open_into = rng.bernoulli(0.5) ? wall->room_neg : wall->room_pos;
                const auto swing = op.swing_rect(*wall);
                bool collides = false;
                for (const Rect& other : swings)
                    if (rects_overlap(*swing, other)) collides = true;
                if (collides) continue;
                swings.push_back(*swing);
            }
            openings.push_back(op);
            ++next_id;
            placed = true;
        }
        if (!placed)
            throw PlacementExhausted("no collision-free opening between rooms " +
                                     std::to_string(conn.room_a) + " and " +
                                     std::to_string(conn.room_b));
    }
    return openings;
}

Opening place_exterior_door(const FloorPlan& plan, const std::vector<Wall>& walls,
                            const std::vector<Opening>& existing, const AssetCatalog& catalog,
                            Split split, Rng& rng) {
    const auto doors = catalog.door_assets("doorway", split);
    if (doors.empty()) throw PlacementExhausted("catalog has no doorway assets");

    auto collect = [&](bool preferred_rooms_only) {
        std::vector<const Wall*> out;
        for (const Wall& w : walls) {
            const int room = w.room_neg == kExterior ? w.room_pos : w.room_neg;
            if (w.room_neg != kExterior && w.room_pos != kExterior) continue;
            const RoomType t = plan.rooms[room].type;
            const bool preferred = t == RoomType::Kitchen || t == RoomType::LivingRoom;
            if (preferred_rooms_only && !preferred) continue;
            double min_width = 1e300;
            for (const AssetInstance* d : doors) min_width = std::min(min_width, d->bbox.x);
            if (w.length() >= min_width) out.push_back(&w);
        }
        return out;
    };

    std::vector<const Wall*> candidates = collect(true);
    if (candidates.empty()) candidates = collect(false);
    if (candidates.empty()) throw PlacementExhausted("no exterior wall fits a door");

    const Wall* wall = pick_wall_by_length(candidates, rng);
    std::vector<const AssetInstance*> fitting;
    for (const AssetInstance* d : doors)
        if (d->bbox.x <= wall->length()) fitting.push_back(d);
    const AssetInstance* door = rng.pick(fitting);

    Opening op;
    op.id = existing.empty() ? 0 : existing.back().id + 1;
    op.kind = OpeningKind::ExteriorDoor;
    op.wall = wall->id;
    op.room_a = wall->room_neg == kExterior ? wall->room_pos : wall->room_neg;
    op.room_b = kExterior;
    op.asset_id = door->id;
    op.offset = rng.uniform_real(0.0, wall->length() - door->bbox.x);
    op.width = door->bbox.x;
    op.open_into = kExterior;
    return op;
}

}  // namespace prochouse
