#pragma once

#include <string>
#include <vector>

#include "prochouse/geometry.hpp"
#include "prochouse/rng.hpp"
#include "prochouse/roomspec.hpp"

namespace prochouse {

// Layout tunables. Defaults reproduce the shipped generation behaviour.
struct GenParams {
    int min_dim = 2;              // smallest boundary dimension (meters, pre-scale)
    double avg_room_dim = 3.0;    // average boundary size per sqrt(room)
    int max_cut_area = 6;         // caps corner cut rectangles
    double cut_beta_b = 6.0;      // Beta(n_r / 2, cut_beta_b) drives the cut count
    double scale_min = 1.6;
    double scale_max = 2.2;
    int min_room_cells = 2;       // smallest room area pre-scale, in cells
    int subdivide_attempts = 12;  // internal retries before SubdivisionFailure
};

// Rectilinear outline of the house on a unit-cell grid (pre-scale meters).
struct InteriorBoundary {
    GridMask inside;
    int cuts_applied = 0;
    int cuts_skipped = 0;  // cuts that would disconnect or empty the inside

    int xs() const { return inside.w; }
    int zs() const { return inside.h; }
};

struct PlanRoom {
    int id = 0;
    RoomType type = RoomType::Bedroom;
    bool avoid_door_beyond_parent = false;
    GridMask cells;    // same grid dims as the boundary
    Polygon polygon;   // outer ring in cell units, CCW
    int cell_count = 0;
};

struct FloorPlan {
    InteriorBoundary boundary;
    std::vector<PlanRoom> rooms;
    double scale = 1.0;

    Polygon room_polygon_m(int room_id) const { return rooms[room_id].polygon.scaled(scale); }
    double width_m() const { return boundary.xs() * scale; }
    double depth_m() const { return boundary.zs() * scale; }
    int room_of_cell(int x, int z) const;  // -1 when outside every room
    // Stable byte encoding of the plan, used by determinism checks.
    std::string fingerprint() const;
};

// Full rectangle with both dimensions drawn from the discrete uniform around
// avg_room_dim * sqrt(n_r); bounds round inward to keep the support nonempty.
InteriorBoundary sample_boundary(int n_rooms, const GenParams& params, Rng& rng,
                                 const BoundaryOverride* override_range = nullptr);

// Removes corner-anchored rectangles. The cut count follows
// floor(10 * Beta(n_r/2, 6) + 1/2); cuts that would disconnect or empty the
// inside are skipped and counted.
InteriorBoundary apply_cuts(InteriorBoundary boundary, int n_rooms, const GenParams& params,
                            Rng& rng);

// Recursive room growing over the spec tree: per zone, children regions are
// seeded maximally separated, then grown strip by strip with probability
// proportional to growth weight until the zone's cells are all claimed.
FloorPlan subdivide(const InteriorBoundary& boundary, const RoomSpec& spec, const GenParams& params,
                    Rng& rng);

// Uniform scale in [scale_min, scale_max).
FloorPlan scale_plan(FloorPlan plan, const GenParams& params, Rng& rng);

// Integer support of the boundary formula, exposed for tests.
std::pair<int, int> boundary_dim_support(int n_rooms, const GenParams& params);

// Draw of the cut-count distribution floor(10 * Beta(n_r/2, beta_b) + 1/2).
int sample_cut_count(int n_rooms, const GenParams& params, Rng& rng);

// Applies one corner cut (corner: 0 SW, 1 SE, 2 NW, 3 NE). Returns false and
// leaves the boundary untouched when the cut would disconnect or empty it.
bool apply_single_cut(InteriorBoundary& boundary, int cx, int cz, int corner,
                      const GenParams& params);

}  // namespace prochouse
