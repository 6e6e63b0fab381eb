#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prochouse/catalog.hpp"
#include "prochouse/geometry.hpp"
#include "prochouse/rng.hpp"

namespace prochouse {

struct PlacedMember {
    std::string sampler_id;
    const AssetInstance* instance = nullptr;
    Vec2 center;            // footprint center in the group frame
    double y = 0.0;         // bottom face height (on_top members stack on their parent)
    double rotation = 0.0;  // yaw within the group, multiple of 90

    Rect footprint() const {
        const bool swapped = std::abs(std::fmod(rotation, 180.0)) > 45.0;
        const double w = swapped ? instance->bbox.z : instance->bbox.x;
        const double d = swapped ? instance->bbox.x : instance->bbox.z;
        return Rect::from_center(center, w, d);
    }
};

struct PlacedGroup {
    const SagDef* def = nullptr;
    std::vector<PlacedMember> members;  // root first, then DFS order
    Rect footprint;                     // union of member footprints

    PlacedGroup translated(Vec2 d) const;
};

// Samples one instance per sampler (linked samplers share their draw), lays
// members out with the anchor/pivot/offset algebra, and rejects layouts where
// member boxes clip (2D footprints overlapping while vertical spans overlap,
// except across allow_overlap edges). Returns nullopt when max_attempts
// rejections run out.
std::optional<PlacedGroup> instantiate_sag(const SagDef& def, const AssetCatalog& catalog,
                                           Split split, Rng& rng, int max_attempts = 20);

// Number of distinct instance combinations: linked samplers collapse into one
// shared choice.
long long count_combinations(const SagDef& def, const AssetCatalog& catalog);

}  // namespace prochouse
