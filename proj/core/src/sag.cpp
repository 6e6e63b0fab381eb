#include "prochouse/sag.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace prochouse {

namespace {

double anchor_x(const Rect& r, AnchorH h) {
    switch (h) {
        case AnchorH::Left: return r.x0;
        case AnchorH::Center: return (r.x0 + r.x1) / 2;
        case AnchorH::Right: return r.x1;
    }
    return r.x0;
}

double anchor_z(const Rect& r, AnchorV v) {
    switch (v) {
        case AnchorV::Bottom: return r.z0;
        case AnchorV::Center: return (r.z0 + r.z1) / 2;
        case AnchorV::Top: return r.z1;
    }
    return r.z0;
}

}  // namespace

PlacedGroup PlacedGroup::translated(Vec2 d) const {
    PlacedGroup out = *this;
    for (PlacedMember& m : out.members) m.center = m.center + d;
    out.footprint = out.footprint.translated(d);
    return out;
}

std::optional<PlacedGroup> instantiate_sag(const SagDef& def, const AssetCatalog& catalog,
                                           Split split, Rng& rng, int max_attempts) {
    if (def.samplers.empty()) return PlacedGroup{&def, {}, {}};

    // Link groups share one draw; every other sampler draws independently.
    std::map<std::string, int> link_of;  // sampler id -> link index
    for (size_t li = 0; li < def.links.size(); ++li)
        for (const std::string& sid : def.links[li]) link_of[sid] = static_cast<int>(li);

    auto candidates_for = [&](const AssetSampler& s) {
        std::vector<const AssetInstance*> out;
        for (const std::string& cid : s.candidates) {
            const AssetInstance* inst = catalog.find_instance(cid);
            if (inst && split_matches(inst->split, split)) out.push_back(inst);
        }
        return out;
    };
    auto link_candidates = [&](size_t li) {
        // Intersection across the link's samplers, kept sorted by id.
        std::vector<std::string> shared;
        bool first = true;
        for (const std::string& sid : def.links[li]) {
            const AssetSampler* s = def.find_sampler(sid);
            std::vector<std::string> ids;
            for (const AssetInstance* inst : candidates_for(*s)) ids.push_back(inst->id);
            if (first) {
                shared = ids;
                first = false;
            } else {
                std::vector<std::string> merged;
                std::set_intersection(shared.begin(), shared.end(), ids.begin(), ids.end(),
                                      std::back_inserter(merged));
                shared = merged;
            }
        }
        return shared;
    };

    // Children listed per parent, order of the def's edge list.
    std::map<std::string, std::vector<const SagEdge*>> children;
    std::map<std::string, const SagEdge*> edge_to;
    for (const SagEdge& e : def.edges) {
        children[e.parent].push_back(&e);
        edge_to[e.child] = &e;
    }

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        // Draw instances.
        std::map<std::string, const AssetInstance*> chosen;
        std::vector<const AssetInstance*> link_draw(def.links.size(), nullptr);
        bool draw_ok = true;
        for (const AssetSampler& s : def.samplers) {
            auto it = link_of.find(s.id);
            if (it != link_of.end()) {
                if (!link_draw[it->second]) {
                    const auto shared = link_candidates(it->second);
                    if (shared.empty()) {
                        draw_ok = false;
                        break;
                    }
                    link_draw[it->second] = catalog.find_instance(rng.pick(shared));
                }
                chosen[s.id] = link_draw[it->second];
            } else {
                const auto cands = candidates_for(s);
                if (cands.empty()) {
                    draw_ok = false;
                    break;
                }
                chosen[s.id] = rng.pick(cands);
            }
        }
        if (!draw_ok) return std::nullopt;

        // Lay members out from the root.
        PlacedGroup group;
        group.def = &def;
        std::map<std::string, size_t> member_index;

        auto place = [&](const std::string& sid, Vec2 center, double y, double rot,
                         auto&& self) -> void {
            PlacedMember m;
            m.sampler_id = sid;
            m.instance = chosen[sid];
            m.center = center;
            m.y = y;
            m.rotation = rot;
            member_index[sid] = group.members.size();
            group.members.push_back(m);
            const Rect parent_rect = group.members.back().footprint();

            auto it = children.find(sid);
            if (it == children.end()) return;
            for (const SagEdge* e : it->second) {
                const double child_rot = std::fmod(rot + e->rotation + 360.0, 360.0);
                const AssetInstance* child_inst = chosen[e->child];
                const bool swapped = std::abs(std::fmod(child_rot, 180.0)) > 45.0;
                const double cw = swapped ? child_inst->bbox.z : child_inst->bbox.x;
                const double cd = swapped ? child_inst->bbox.x : child_inst->bbox.z;
                const Vec2 anchor{anchor_x(parent_rect, e->anchor_h),
                                  anchor_z(parent_rect, e->anchor_v)};
                const Vec2 pivot_target = anchor + e->offset;
                // Solve the child center so its pivot point lands on target.
                const Rect at_origin = Rect::from_center({0, 0}, cw, cd);
                const Vec2 pivot_local{anchor_x(at_origin, e->pivot_h),
                                       anchor_z(at_origin, e->pivot_v)};
                const Vec2 child_center = pivot_target - pivot_local;
                const double child_y = e->on_top ? y + chosen[sid]->bbox.y : y;
                self(e->child, child_center, child_y, child_rot, self);
            }
        };
        place(def.root, {0, 0}, 0.0, 0.0, place);

        // Members resting on a parent must fit on its top face.
        bool clipped = false;
        for (const SagEdge& e : def.edges) {
            if (!e.on_top) continue;
            const PlacedMember& parent = group.members[member_index[e.parent]];
            const PlacedMember& child = group.members[member_index[e.child]];
            if (!parent.footprint().contains_rect(child.footprint())) clipped = true;
        }

        // Clip rejection: 3D box test on footprints plus vertical spans.
        for (size_t i = 0; i < group.members.size() && !clipped; ++i) {
            for (size_t j = i + 1; j < group.members.size() && !clipped; ++j) {
                const PlacedMember& a = group.members[i];
                const PlacedMember& b = group.members[j];
                const SagEdge* eb = edge_to.count(b.sampler_id) ? edge_to.at(b.sampler_id) : nullptr;
                const SagEdge* ea = edge_to.count(a.sampler_id) ? edge_to.at(a.sampler_id) : nullptr;
                const bool exempt = (eb && eb->parent == a.sampler_id && eb->allow_overlap) ||
                                    (ea && ea->parent == b.sampler_id && ea->allow_overlap);
                if (exempt) continue;
                if (rects_overlap(a.footprint(), b.footprint()) &&
                    intervals_overlap(a.y, a.y + a.instance->bbox.y, b.y, b.y + b.instance->bbox.y))
                    clipped = true;
            }
        }
        if (clipped) continue;

        Rect fp = group.members[0].footprint();
        for (const PlacedMember& m : group.members) {
            const Rect r = m.footprint();
            fp.x0 = std::min(fp.x0, r.x0);
            fp.z0 = std::min(fp.z0, r.z0);
            fp.x1 = std::max(fp.x1, r.x1);
            fp.z1 = std::max(fp.z1, r.z1);
        }
        group.footprint = fp;
        return group;
    }
    return std::nullopt;
}

long long count_combinations(const SagDef& def, const AssetCatalog& catalog) {
    (void)catalog;
    std::set<std::string> linked;
    for (const auto& link : def.links)
        for (const std::string& sid : link) linked.insert(sid);

    long long total = 1;
    for (const AssetSampler& s : def.samplers)
        if (!linked.count(s.id)) total *= static_cast<long long>(s.candidates.size());

    for (const auto& link : def.links) {
        std::vector<std::string> shared;
        bool first = true;
        for (const std::string& sid : link) {
            const AssetSampler* s = def.find_sampler(sid);
            std::vector<std::string> ids = s->candidates;
            if (first) {
                shared = ids;
                first = false;
            } else {
                std::vector<std::string> merged;
                std::set_intersection(shared.begin(), shared.end(), ids.begin(), ids.end(),
                                      std::back_inserter(merged));
                shared = merged;
            }
        }
        total *= static_cast<long long>(shared.size());
    }
    return total;
}

}  // namespace prochouse
