#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace prochouse {

// The house lives in the x/z plane; y is up.
struct Vec2 {
    double x = 0.0;
    double z = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, z + o.z}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, z - o.z}; }
    Vec2 operator*(double s) const { return {x * s, z * s}; }
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.z * b.z; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.z - a.z * b.x; }
inline double length(const Vec2& a) { return std::sqrt(dot(a, a)); }
inline double distance(const Vec2& a, const Vec2& b) { return length(a - b); }

// Axis-aligned rectangle, x0 <= x1 and z0 <= z1.
struct Rect {
    double x0 = 0.0, z0 = 0.0, x1 = 0.0, z1 = 0.0;

    static Rect from_center(Vec2 c, double width, double depth) {
        return {c.x - width / 2, c.z - depth / 2, c.x + width / 2, c.z + depth / 2};
    }

    double width() const { return x1 - x0; }
    double depth() const { return z1 - z0; }
    double area() const { return width() * depth(); }
    Vec2 center() const { return {(x0 + x1) / 2, (z0 + z1) / 2}; }

    bool contains(Vec2 p, double eps = 0.0) const {
        return p.x >= x0 - eps && p.x <= x1 + eps && p.z >= z0 - eps && p.z <= z1 + eps;
    }
    bool contains_rect(const Rect& r, double eps = 1e-9) const {
        return r.x0 >= x0 - eps && r.x1 <= x1 + eps && r.z0 >= z0 - eps && r.z1 <= z1 + eps;
    }
    Rect expanded(double m) const { return {x0 - m, z0 - m, x1 + m, z1 + m}; }
    Rect expanded(double left, double bottom, double right, double top) const {
        return {x0 - left, z0 - bottom, x1 + right, z1 + top};
    }
    Rect translated(Vec2 d) const { return {x0 + d.x, z0 + d.z, x1 + d.x, z1 + d.z}; }
};

// Open-interval overlap: rectangles that merely touch do not overlap.
inline bool rects_overlap(const Rect& a, const Rect& b, double eps = 1e-9) {
    return a.x0 < b.x1 - eps && b.x0 < a.x1 - eps && a.z0 < b.z1 - eps && b.z0 < a.z1 - eps;
}

inline bool intervals_overlap(double a0, double a1, double b0, double b1, double eps = 1e-9) {
    return a0 < b1 - eps && b0 < a1 - eps;
}

double dist_point_segment(Vec2 p, Vec2 a, Vec2 b);

// True when segment ab crosses segment cd (shared endpoints and grazing touches
// within eps do not count).
bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double eps = 1e-9);

bool segment_intersects_rect(Vec2 a, Vec2 b, const Rect& r, double eps = 1e-9);

// Simple rectilinear polygon, one ring, no repeated vertices.
struct Polygon {
    std::vector<Vec2> pts;

    double signed_area() const;
    double area() const { return std::abs(signed_area()); }
    bool is_ccw() const { return signed_area() > 0; }
    Vec2 centroid() const;
    Rect bbox() const;
    bool contains(Vec2 p) const;
    // Distance from p to the nearest polygon edge.
    double boundary_distance(Vec2 p) const;
    Polygon scaled(double s) const;
};

// Boolean grid of unit cells, indexed [x, z], z-major storage.
struct GridMask {
    int w = 0;
    int h = 0;
    std::vector<uint8_t> cells;

    GridMask() = default;
    GridMask(int w_, int h_, bool fill = false)
        : w(w_), h(h_), cells(static_cast<size_t>(w_) * h_, fill ? 1 : 0) {}

    bool in_bounds(int x, int z) const { return x >= 0 && x < w && z >= 0 && z < h; }
    bool at(int x, int z) const { return in_bounds(x, z) && cells[static_cast<size_t>(z) * w + x] != 0; }
    void set(int x, int z, bool v) { cells[static_cast<size_t>(z) * w + x] = v ? 1 : 0; }
    int count() const { return static_cast<int>(std::count(cells.begin(), cells.end(), uint8_t{1})); }
};

// 4-connectivity of the set cells (empty mask counts as connected).
bool mask_connected4(const GridMask& m);

// Traces every boundary ring of the mask. The outer ring of each component is
// CCW, holes are CW. Collinear vertices are merged.
std::vector<Polygon> trace_mask_rings(const GridMask& m);

// Outer ring of a mask expected to be one simply-connected component.
// Returns false when the mask has holes, several components, or a pinch vertex.
bool trace_simple_ring(const GridMask& m, Polygon& out);

}  // namespace prochouse
