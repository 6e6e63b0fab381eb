#include "prochouse/geometry.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace prochouse {

double dist_point_segment(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 <= 0.0) return distance(p, a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, a + ab * t);
}

bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double eps) {
    const double d1 = cross(b - a, c - a);
    const double d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c);
    const double d4 = cross(d - c, b - c);
    if (((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) &&
        ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps)))
        return true;
    // Collinear overlap of more than a point counts as a crossing.
    if (std::abs(d1) <= eps && std::abs(d2) <= eps) {
        const double lo1 = std::min(a.x + a.z, b.x + b.z);
        const double hi1 = std::max(a.x + a.z, b.x + b.z);
        const double lo2 = std::min(c.x + c.z, d.x + d.z);
        const double hi2 = std::max(c.x + c.z, d.x + d.z);
        return std::min(hi1, hi2) - std::max(lo1, lo2) > eps;
    }
    return false;
}

bool segment_intersects_rect(Vec2 a, Vec2 b, const Rect& r, double eps) {
    if (r.contains(a, -eps) || r.contains(b, -eps)) return true;
    const Vec2 c0{r.x0, r.z0}, c1{r.x1, r.z0}, c2{r.x1, r.z1}, c3{r.x0, r.z1};
    return segments_cross(a, b, c0, c1, eps) || segments_cross(a, b, c1, c2, eps) ||
           segments_cross(a, b, c2, c3, eps) || segments_cross(a, b, c3, c0, eps);
}

double Polygon::signed_area() const {
    double s = 0.0;
    const size_t n = pts.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& p = pts[i];
        const Vec2& q = pts[(i + 1) % n];
        s += p.x * q.z - q.x * p.z;
    }
    return s / 2.0;
}

Vec2 Polygon::centroid() const {
    double cx = 0.0, cz = 0.0;
    const size_t n = pts.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& p = pts[i];
        const Vec2& q = pts[(i + 1) % n];
        const double w = p.x * q.z - q.x * p.z;
        cx += (p.x + q.x) * w;
        cz += (p.z + q.z) * w;
    }
    const double a = signed_area();
    if (std::abs(a) < 1e-12) return pts.empty() ? Vec2{} : pts[0];
    return {cx / (6 * a), cz / (6 * a)};
}

Rect Polygon::bbox() const {
    Rect r{1e300, 1e300, -1e300, -1e300};
    for (const Vec2& p : pts) {
        r.x0 = std::min(r.x0, p.x);
        r.z0 = std::min(r.z0, p.z);
        r.x1 = std::max(r.x1, p.x);
        r.z1 = std::max(r.z1, p.z);
    }
    return r;
}

bool Polygon::contains(Vec2 p) const {
    // Even-odd ray cast toward +x. Points on the boundary may land either way,
    // callers test strictly interior points.
    bool inside = false;
    const size_t n = pts.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& a = pts[i];
        const Vec2& b = pts[j];
        if ((a.z > p.z) != (b.z > p.z)) {
            const double xhit = a.x + (p.z - a.z) / (b.z - a.z) * (b.x - a.x);
            if (p.x < xhit) inside = !inside;
        }
    }
    return inside;
}

double Polygon::boundary_distance(Vec2 p) const {
    double best = 1e300;
    const size_t n = pts.size();
    for (size_t i = 0; i < n; ++i)
        best = std::min(best, dist_point_segment(p, pts[i], pts[(i + 1) % n]));
    return best;
}

Polygon Polygon::scaled(double s) const {
    Polygon out;
    out.pts.reserve(pts.size());
    for (const Vec2& p : pts) out.pts.push_back({p.x * s, p.z * s});
    return out;
}

bool mask_connected4(const GridMask& m) {
    const int total = m.count();
    if (total == 0) return true;
    int sx = -1, sz = -1;
    for (int z = 0; z < m.h && sx < 0; ++z)
        for (int x = 0; x < m.w; ++x)
            if (m.at(x, z)) {
                sx = x;
                sz = z;
                break;
            }
    GridMask seen(m.w, m.h);
    std::vector<std::pair<int, int>> stack{{sx, sz}};
    seen.set(sx, sz, true);
    int reached = 0;
    while (!stack.empty()) {
        auto [x, z] = stack.back();
        stack.pop_back();
        ++reached;
        const int dx[4] = {1, -1, 0, 0};
        const int dz[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            const int nx = x + dx[k], nz = z + dz[k];
            if (m.at(nx, nz) && !seen.at(nx, nz)) {
                seen.set(nx, nz, true);
                stack.push_back({nx, nz});
            }
        }
    }
    return reached == total;
}

namespace {

struct IVec {
    int x, z;
    bool operator<(const IVec& o) const { return x != o.x ? x < o.x : z < o.z; }
    bool operator==(const IVec& o) const { return x == o.x && z == o.z; }
};

}  // namespace

std::vector<Polygon> trace_mask_rings(const GridMask& m) {
    // Directed boundary edges with the inside on the left: outer rings come out
    // CCW, holes CW.
    std::multimap<IVec, IVec> edges;
    for (int z = 0; z < m.h; ++z) {
        for (int x = 0; x < m.w; ++x) {
            if (!m.at(x, z)) continue;
            if (!m.at(x, z - 1)) edges.insert({{x, z}, {x + 1, z}});
            if (!m.at(x + 1, z)) edges.insert({{x + 1, z}, {x + 1, z + 1}});
            if (!m.at(x, z + 1)) edges.insert({{x + 1, z + 1}, {x, z + 1}});
            if (!m.at(x - 1, z)) edges.insert({{x, z + 1}, {x, z}});
        }
    }
    std::vector<Polygon> rings;
    while (!edges.empty()) {
        auto it = edges.begin();
        const IVec start = it->first;
        IVec prev = start;
        IVec cur = it->second;
        edges.erase(it);
        std::vector<IVec> ring{start};
        while (!(cur == start)) {
            ring.push_back(cur);
            auto [lo, hi] = edges.equal_range(cur);
            if (lo == hi) return {};  // open chain, malformed mask
            // At a pinch vertex two edges leave; take the leftmost turn so rings
            // stay separated.
            auto pick = lo;
            if (std::distance(lo, hi) > 1) {
                const IVec dir{cur.x - prev.x, cur.z - prev.z};
                int best = -3;
                for (auto e = lo; e != hi; ++e) {
                    const IVec nd{e->second.x - cur.x, e->second.z - cur.z};
                    const int turn = dir.x * nd.z - dir.z * nd.x;  // +1 left, -1 right
                    const int score = (nd.x == -dir.x && nd.z == -dir.z) ? -2 : turn;
                    if (score > best) {
                        best = score;
                        pick = e;
                    }
                }
            }
            prev = cur;
            cur = pick->second;
            edges.erase(pick);
        }
        // Merge collinear runs.
        Polygon poly;
        const size_t n = ring.size();
        for (size_t i = 0; i < n; ++i) {
            const IVec& a = ring[(i + n - 1) % n];
            const IVec& b = ring[i];
            const IVec& c = ring[(i + 1) % n];
            const int turn = (b.x - a.x) * (c.z - b.z) - (b.z - a.z) * (c.x - b.x);
            if (turn != 0) poly.pts.push_back({static_cast<double>(b.x), static_cast<double>(b.z)});
        }
        rings.push_back(std::move(poly));
    }
    return rings;
}

bool trace_simple_ring(const GridMask& m, Polygon& out) {
    if (!mask_connected4(m) || m.count() == 0) return false;
    std::vector<Polygon> rings = trace_mask_rings(m);
    if (rings.size() != 1) return false;
    // A pinch vertex shows up as a repeated point on the single ring.
    std::vector<IVec> seen;
    for (const Vec2& p : rings[0].pts) {
        const IVec v{static_cast<int>(std::lround(p.x)), static_cast<int>(std::lround(p.z))};
        for (const IVec& s : seen)
            if (s == v) return false;
        seen.push_back(v);
    }
    out = std::move(rings[0]);
    if (!out.is_ccw()) std::reverse(out.pts.begin(), out.pts.end());
    return true;
}

}  // namespace prochouse
