#include "prochouse/house.hpp"

namespace prochouse {

const char* to_string(OpeningKind k) {
    switch (k) {
        case OpeningKind::Doorway: return "doorway";
        case OpeningKind::DoorFrame: return "door_frame";
        case OpeningKind::OpenWall: return "open_wall";
        case OpeningKind::ExteriorDoor: return "exterior_door";
    }
    return "?";
}

const char* to_string(ObjectPlacement p) {
    switch (p) {
        case ObjectPlacement::Floor: return "floor";
        case ObjectPlacement::Wall: return "wall";
        case ObjectPlacement::Surface: return "surface";
        case ObjectPlacement::SagMember: return "sag_member";
    }
    return "?";
}

std::optional<Rect> Opening::swing_rect(const Wall& w) const {
    if (kind != OpeningKind::Doorway || open_into == kExterior) return std::nullopt;
    const bool into_pos = open_into == w.room_pos;
    if (w.axis == 'x') {
        const double z0 = into_pos ? w.coord : w.coord - width;
        return Rect{w.lo + offset, z0, w.lo + offset + width, z0 + width};
    }
    const double x0 = into_pos ? w.coord : w.coord - width;
    return Rect{x0, w.lo + offset, x0 + width, w.lo + offset + width};
}

}  // namespace prochouse
