#include "prochouse/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace prochouse {

namespace {

const char* room_fill(RoomType t) {
    switch (t) {
        case RoomType::Bedroom: return "#aec9e8";
        case RoomType::Bathroom: return "#b7e0c9";
        case RoomType::Kitchen: return "#f4d8a8";
        case RoomType::LivingRoom: return "#e8b8b0";
    }
    return "#dddddd";
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string render_svg(const House& house, const AssetCatalog& catalog, const SvgOptions& opt) {
    const double s = opt.px_per_meter;
    const double m = opt.margin_px;
    const double w_px = house.boundary_width * s + 2 * m;
    const double h_px = house.boundary_depth * s + 2 * m;
    // Flip z so +z points up on screen.
    auto X = [&](double x) { return m + x * s; };
    auto Z = [&](double z) { return h_px - (m + z * s); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w_px) << "\" height=\""
        << fmt(h_px) << "\" viewBox=\"0 0 " << fmt(w_px) << " " << fmt(h_px) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    for (const RoomInfo& room : house.rooms) {
        out << "<polygon data-room=\"" << room.id << "\" points=\"";
        for (const Vec2& p : room.floor_polygon.pts) out << fmt(X(p.x)) << "," << fmt(Z(p.z)) << " ";
        out << "\" fill=\"" << room_fill(room.type) << "\" stroke=\"none\"/>\n";
    }

    for (const Wall& wall : house.walls) {
        const Vec2 a = wall.p0();
        const Vec2 b = wall.p1();
        out << "<line x1=\"" << fmt(X(a.x)) << "\" y1=\"" << fmt(Z(a.z)) << "\" x2=\""
            << fmt(X(b.x)) << "\" y2=\"" << fmt(Z(b.z))
            << "\" stroke=\"#333333\" stroke-width=\"3\"/>\n";
    }

    auto draw_opening = [&](const Opening& op, const char* color) {
        const Wall* wall = house.wall_by_id(op.wall);
        if (!wall) return;
        const Vec2 a = wall->point_at(op.offset);
        const Vec2 b = wall->point_at(op.offset + op.width);
        out << "<line data-door=\"" << op.id << "\" x1=\"" << fmt(X(a.x)) << "\" y1=\""
            << fmt(Z(a.z)) << "\" x2=\"" << fmt(X(b.x)) << "\" y2=\"" << fmt(Z(b.z))
            << "\" stroke=\"" << color << "\" stroke-width=\"5\"/>\n";
    };
    for (const Opening& op : house.open_walls) draw_opening(op, "#ffffff");
    for (const Opening& op : house.doors)
        draw_opening(op, op.kind == OpeningKind::ExteriorDoor ? "#c28a4b" : "#f5f0e6");

    for (const SceneObject& window : house.windows) {
        const Wall* wall = house.wall_by_id(window.wall);
        const AssetInstance* inst = catalog.find_instance(window.asset_id);
        if (!wall || !inst) continue;
        const Rect fp = window.footprint(inst->bbox.x, inst->bbox.z);
        out << "<rect data-window=\"" << window.id << "\" x=\"" << fmt(X(fp.x0)) << "\" y=\""
            << fmt(Z(fp.z1)) << "\" width=\"" << fmt(fp.width() * s) << "\" height=\""
            << fmt(fp.depth() * s) << "\" fill=\"#7ec8e3\"/>\n";
    }

    if (opt.draw_objects) {
        auto draw_object = [&](const SceneObject& o, auto&& self) -> void {
            const AssetInstance* inst = catalog.find_instance(o.asset_id);
            if (inst) {
                const Rect fp = o.footprint(inst->bbox.x, inst->bbox.z);
                out << "<rect data-object=\"" << o.id << "\" data-room=\"" << o.room << "\" x=\""
                    << fmt(X(fp.x0)) << "\" y=\"" << fmt(Z(fp.z1)) << "\" width=\""
                    << fmt(fp.width() * s) << "\" height=\"" << fmt(fp.depth() * s)
                    << "\" fill=\"#8d8d8d\" fill-opacity=\"0.55\" stroke=\"#555555\" "
                       "stroke-width=\"1\"/>\n";
            }
            for (const SceneObject& c : o.children) self(c, self);
        };
        for (const SceneObject& o : house.objects) draw_object(o, draw_object);
    }

    if (opt.draw_lights) {
        for (const PointLight& pl : house.lighting.point_lights)
            out << "<circle cx=\"" << fmt(X(pl.position.x)) << "\" cy=\"" << fmt(Z(pl.position.z))
                << "\" r=\"4\" fill=\"#f2c14e\"/>\n";
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace prochouse
