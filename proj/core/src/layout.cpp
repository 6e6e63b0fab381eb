#include "prochouse/layout.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "prochouse/errors.hpp"

namespace prochouse {

std::pair<int, int> boundary_dim_support(int n_rooms, const GenParams& params) {
    const double mid = params.avg_room_dim * std::sqrt(static_cast<double>(n_rooms));
    const double lo = std::max(static_cast<double>(params.min_dim), mid - params.avg_room_dim / 2);
    const double hi = mid + params.avg_room_dim / 2;
    int ilo = static_cast<int>(std::ceil(lo - 1e-9));
    int ihi = static_cast<int>(std::floor(hi + 1e-9));
    ilo = std::max(ilo, params.min_dim);
    if (ihi < ilo) ihi = ilo;
    return {ilo, ihi};
}

InteriorBoundary sample_boundary(int n_rooms, const GenParams& params, Rng& rng,
                                 const BoundaryOverride* override_range) {
    int x_lo, x_hi, z_lo, z_hi;
    if (override_range) {
        x_lo = override_range->x_min;
        x_hi = override_range->x_max;
        z_lo = override_range->z_min;
        z_hi = override_range->z_max;
    } else {
        std::tie(x_lo, x_hi) = boundary_dim_support(n_rooms, params);
        std::tie(z_lo, z_hi) = boundary_dim_support(n_rooms, params);
    }
    const int xs = static_cast<int>(rng.uniform_int(x_lo, x_hi));
    const int zs = static_cast<int>(rng.uniform_int(z_lo, z_hi));
    InteriorBoundary b;
    b.inside = GridMask(xs, zs, true);
    return b;
}

int sample_cut_count(int n_rooms, const GenParams& params, Rng& rng) {
    const double alpha = n_rooms / 2.0;
    return static_cast<int>(std::floor(10.0 * rng.beta(alpha, params.cut_beta_b) + 0.5));
}

bool apply_single_cut(InteriorBoundary& boundary, int cx, int cz, int corner,
                      const GenParams& params) {
    const int xs = boundary.xs();
    const int zs = boundary.zs();
    GridMask trial = boundary.inside;
    const int x0 = (corner == 0 || corner == 2) ? 0 : std::max(0, xs - cx);
    const int z0 = (corner == 0 || corner == 1) ? 0 : std::max(0, zs - cz);
    for (int z = z0; z < std::min(zs, z0 + cz); ++z)
        for (int x = x0; x < std::min(xs, x0 + cx); ++x) trial.set(x, z, false);
    if (trial.count() >= params.min_dim * params.min_dim && mask_connected4(trial)) {
        boundary.inside = trial;
        boundary.cuts_applied++;
        return true;
    }
    boundary.cuts_skipped++;
    return false;
}

InteriorBoundary apply_cuts(InteriorBoundary boundary, int n_rooms, const GenParams& params,
                            Rng& rng) {
    const int xs = boundary.xs();
    const int n_cuts = sample_cut_count(n_rooms, params, rng);
    for (int i = 0; i < n_cuts; ++i) {
        const int cx_hi = std::max(2, std::min(xs - 1, params.max_cut_area / 2) - 1);
        const int cx = static_cast<int>(rng.uniform_int(1, cx_hi));
        const int cz = static_cast<int>(rng.uniform_int(1, std::max(1, params.max_cut_area - cx)));
        const int corner = static_cast<int>(rng.uniform_int(0, 3));
        apply_single_cut(boundary, cx, cz, corner, params);
    }
    return boundary;
}

namespace {

struct FlatNode {
    const SpecNode* node;
    double weight;
};

// Farthest-point seeding over geodesic (in-region BFS) distance; ties resolve
// in scan order so seeding is reproducible.
std::vector<int> pick_seeds(const GridMask& region, int k, Rng& rng) {
    std::vector<int> cells;
    for (int z = 0; z < region.h; ++z)
        for (int x = 0; x < region.w; ++x)
            if (region.at(x, z)) cells.push_back(z * region.w + x);

    std::vector<int> seeds;
    seeds.push_back(cells[static_cast<size_t>(rng.uniform_int(0, static_cast<int64_t>(cells.size()) - 1))]);

    std::vector<int> dist(static_cast<size_t>(region.w) * region.h, -1);
    auto relax_from = [&](int seed) {
        std::deque<int> q;
        dist[seed] = 0;
        q.push_back(seed);
        while (!q.empty()) {
            const int cur = q.front();
            q.pop_front();
            const int x = cur % region.w, z = cur / region.w;
            const int dx[4] = {1, -1, 0, 0}, dz[4] = {0, 0, 1, -1};
            for (int d = 0; d < 4; ++d) {
                const int nx = x + dx[d], nz = z + dz[d];
                if (!region.at(nx, nz)) continue;
                const int ni = nz * region.w + nx;
                if (dist[ni] < 0 || dist[ni] > dist[cur] + 1) {
                    dist[ni] = dist[cur] + 1;
                    q.push_back(ni);
                }
            }
        }
    };
    relax_from(seeds[0]);
    while (static_cast<int>(seeds.size()) < k) {
        int best = -1, best_d = -1;
        for (int c : cells)
            if (dist[c] > best_d) {
                best_d = dist[c];
                best = c;
            }
        seeds.push_back(best);
        relax_from(best);
    }
    return seeds;
}

// Grows k regions over `region`, claiming cells strip by strip. Returns one
// mask per unit; the masks partition `region` and each is 4-connected.
std::vector<GridMask> grow_regions(const GridMask& region, const std::vector<double>& weights,
                                   Rng& rng) {
    const int k = static_cast<int>(weights.size());
    const int w = region.w, h = region.h;
    std::vector<GridMask> out(k, GridMask(w, h));
    if (k == 1) {
        out[0] = region;
        return out;
    }
    if (region.count() < k) throw SubdivisionFailure("zone region smaller than its child count");

    std::vector<int> owner(static_cast<size_t>(w) * h, -1);
    const std::vector<int> seeds = pick_seeds(region, k, rng);
    for (int i = 0; i < k; ++i) {
        owner[seeds[i]] = i;
        out[i].set(seeds[i] % w, seeds[i] / w, true);
    }

    struct Box {
        int x0, z0, x1, z1;  // inclusive
    };
    std::vector<Box> boxes(k);
    for (int i = 0; i < k; ++i)
        boxes[i] = {seeds[i] % w, seeds[i] / w, seeds[i] % w, seeds[i] / w};

    int unclaimed = region.count() - k;
    std::vector<bool> active(k, true);

    auto strip_cells = [&](int i, int dir) {
        // dir: 0 east, 1 west, 2 north, 3 south of the region's bounding box.
        std::vector<int> cand;
        const Box& b = boxes[i];
        auto consider = [&](int x, int z) {
            if (region.at(x, z) && owner[z * w + x] < 0) cand.push_back(z * w + x);
        };
        if (dir == 0)
            for (int z = b.z0; z <= b.z1; ++z) consider(b.x1 + 1, z);
        else if (dir == 1)
            for (int z = b.z0; z <= b.z1; ++z) consider(b.x0 - 1, z);
        else if (dir == 2)
            for (int x = b.x0; x <= b.x1; ++x) consider(x, b.z1 + 1);
        else
            for (int x = b.x0; x <= b.x1; ++x) consider(x, b.z0 - 1);
        if (cand.empty()) return cand;
        // Keep only strip cells reachable from the current region so the room
        // stays 4-connected.
        std::vector<int> keep;
        std::vector<bool> in_cand(cand.size(), true);
        bool changed = true;
        std::vector<bool> attached(cand.size(), false);
        for (size_t ci = 0; ci < cand.size(); ++ci) {
            const int x = cand[ci] % w, z = cand[ci] / w;
            const int dx[4] = {1, -1, 0, 0}, dz[4] = {0, 0, 1, -1};
            for (int d = 0; d < 4; ++d)
                if (out[i].at(x + dx[d], z + dz[d])) attached[ci] = true;
        }
        while (changed) {
            changed = false;
            for (size_t ci = 0; ci < cand.size(); ++ci) {
                if (attached[ci]) continue;
                for (size_t cj = 0; cj < cand.size(); ++cj) {
                    if (!attached[cj]) continue;
                    const int ax = cand[ci] % w, az = cand[ci] / w;
                    const int bx = cand[cj] % w, bz = cand[cj] / w;
                    if (std::abs(ax - bx) + std::abs(az - bz) == 1) {
                        attached[ci] = true;
                        changed = true;
                        break;
                    }
                }
            }
        }
        for (size_t ci = 0; ci < cand.size(); ++ci)
            if (attached[ci]) keep.push_back(cand[ci]);
        return keep;
    };

    while (unclaimed > 0) {
        std::vector<double> active_weights;
        std::vector<int> active_ids;
        for (int i = 0; i < k; ++i)
            if (active[i]) {
                active_weights.push_back(weights[i]);
                active_ids.push_back(i);
            }
        if (active_ids.empty()) break;
        const int i = active_ids[rng.pick_weighted(active_weights)];

        std::vector<int> dirs_with_cells;
        for (int d = 0; d < 4; ++d)
            if (!strip_cells(i, d).empty()) dirs_with_cells.push_back(d);
        if (dirs_with_cells.empty()) {
            active[i] = false;
            continue;
        }
        const int dir = dirs_with_cells[static_cast<size_t>(
            rng.uniform_int(0, static_cast<int64_t>(dirs_with_cells.size()) - 1))];
        for (int c : strip_cells(i, dir)) {
            owner[c] = i;
            out[i].set(c % w, c / w, true);
            boxes[i].x0 = std::min(boxes[i].x0, c % w);
            boxes[i].x1 = std::max(boxes[i].x1, c % w);
            boxes[i].z0 = std::min(boxes[i].z0, c / w);
            boxes[i].z1 = std::max(boxes[i].z1, c / w);
            --unclaimed;
        }
    }

    // Leftover pockets merge into the adjacent region with the fewest cells.
    while (unclaimed > 0) {
        int start = -1;
        for (int c = 0; c < w * h && start < 0; ++c)
            if (region.cells[c] && owner[c] < 0) start = c;
        std::vector<int> pocket;
        std::deque<int> q{start};
        std::vector<bool> seen(static_cast<size_t>(w) * h, false);
        seen[start] = true;
        std::vector<int> neighbors;
        while (!q.empty()) {
            const int cur = q.front();
            q.pop_front();
            pocket.push_back(cur);
            const int x = cur % w, z = cur / w;
            const int dx[4] = {1, -1, 0, 0}, dz[4] = {0, 0, 1, -1};
            for (int d = 0; d < 4; ++d) {
                const int nx = x + dx[d], nz = z + dz[d];
                if (!region.at(nx, nz)) continue;
                const int ni = nz * w + nx;
                if (owner[ni] >= 0) {
                    neighbors.push_back(owner[ni]);
                } else if (!seen[ni]) {
                    seen[ni] = true;
                    q.push_back(ni);
                }
            }
        }
        std::sort(neighbors.begin(), neighbors.end());
        neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
        int best = neighbors.empty() ? 0 : neighbors[0];
        for (int nb : neighbors)
            if (out[nb].count() < out[best].count()) best = nb;
        for (int c : pocket) {
            owner[c] = best;
            out[best].set(c % w, c / w, true);
            --unclaimed;
        }
    }
    return out;
}

void allocate(const GridMask& region, const SpecNode& node,
              std::vector<std::pair<const SpecNode*, GridMask>>& leaf_regions, Rng& rng) {
    if (node.is_leaf) {
        leaf_regions.push_back({&node, region});
        return;
    }
    std::vector<double> weights;
    for (const SpecNode& c : node.children) weights.push_back(c.growth_weight);
    std::vector<GridMask> parts = grow_regions(region, weights, rng);
    for (size_t i = 0; i < node.children.size(); ++i)
        allocate(parts[i], node.children[i], leaf_regions, rng);
}

}  // namespace

int FloorPlan::room_of_cell(int x, int z) const {
    for (const PlanRoom& r : rooms)
        if (r.cells.at(x, z)) return r.id;
    return -1;
}

std::string FloorPlan::fingerprint() const {
    std::ostringstream os;
    os << boundary.xs() << "x" << boundary.zs() << "@" << scale << ";";
    for (const PlanRoom& r : rooms) {
        os << r.id << ":" << to_string(r.type) << ":";
        for (int z = 0; z < r.cells.h; ++z)
            for (int x = 0; x < r.cells.w; ++x)
                if (r.cells.at(x, z)) os << x << "," << z << " ";
        os << ";";
    }
    return os.str();
}

FloorPlan subdivide(const InteriorBoundary& boundary, const RoomSpec& spec, const GenParams& params,
                    Rng& rng) {
    const std::vector<const SpecNode*> leaves = spec.leaves();
    const int n = static_cast<int>(leaves.size());
    if (boundary.inside.count() < n * params.min_room_cells)
        throw SubdivisionFailure("boundary too small for " + std::to_string(n) + " rooms");

    for (int attempt = 0; attempt < params.subdivide_attempts; ++attempt) {
        std::vector<std::pair<const SpecNode*, GridMask>> leaf_regions;
        try {
            allocate(boundary.inside, spec.root, leaf_regions, rng);
        } catch (const SubdivisionFailure&) {
            continue;
        }

        bool ok = leaf_regions.size() == static_cast<size_t>(n);
        FloorPlan plan;
        plan.boundary = boundary;
        for (int i = 0; ok && i < n; ++i) {
            PlanRoom room;
            room.id = i;
            room.type = leaf_regions[i].first->room_type;
            room.avoid_door_beyond_parent = leaf_regions[i].first->avoid_door_to_parent;
            room.cells = leaf_regions[i].second;
            room.cell_count = room.cells.count();
            if (room.cell_count < params.min_room_cells) ok = false;
            if (ok && !trace_simple_ring(room.cells, room.polygon)) ok = false;
            plan.rooms.push_back(std::move(room));
        }
        if (!ok) continue;
        return plan;
    }
    throw SubdivisionFailure("could not realize spec '" + spec.id + "' on this boundary");
}

FloorPlan scale_plan(FloorPlan plan, const GenParams& params, Rng& rng) {
    plan.scale = rng.uniform_real(params.scale_min, params.scale_max);
    return plan;
}

}  // namespace prochouse
