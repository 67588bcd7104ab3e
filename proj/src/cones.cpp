#include "polyspan/cones.hpp"

#include <stdexcept>

namespace polyspan {

int ConeLabel::sector() const {
    return positive() ? 2 * index : 2 * ((index + 1) % 3) + 1;
}

ConeLabel ConeLabel::from_sector(int sector) {
    sector = ((sector % 6) + 6) % 6;
    if (sector % 2 == 0) return {ConeSign::Positive, sector / 2};
    return {ConeSign::Negative, ((sector - 1) / 2 + 2) % 3};
}

std::string to_string(const ConeLabel& label) {
    return std::string(label.positive() ? "C" : "-C") + std::to_string(label.index);
}

const char* to_string(Side side) {
    switch (side) {
        case Side::Whole: return "whole";
        case Side::Left: return "left";
        case Side::Right: return "right";
    }
    return "?";
}

std::string to_string(const SubconeRef& ref) {
    std::string s = to_string(ref.label) + "@" + std::to_string(ref.apex);
    if (ref.side != Side::Whole) s += std::string("/") + to_string(ref.side);
    return s;
}

ConeLabel cone_of_direction(const Point& d) {
    const int h = sgn(d.y);
    // Signs of the cross products with the 60 and 120 degree boundary rays.
    const int l60 = ExactScalar(d.y, -d.x).sign();
    const int l120 = ExactScalar(-d.y, -d.x).sign();
    if (h == 0 || l60 == 0 || l120 == 0) {
        throw GeneralPositionError("direction lies on a cone boundary");
    }
    int sector = -1;
    if (h > 0) {
        if (l60 < 0 && l120 < 0) sector = 5;
        else if (l60 > 0 && l120 < 0) sector = 0;
        else if (l60 > 0 && l120 > 0) sector = 1;
    } else {
        if (l60 > 0 && l120 > 0) sector = 2;
        else if (l60 < 0 && l120 > 0) sector = 3;
        else if (l60 < 0 && l120 < 0) sector = 4;
    }
    if (sector < 0) throw std::logic_error("inconsistent cone boundary signs");
    return ConeLabel::from_sector(sector);
}

ConeLabel cone_of(const Point& apex, const Point& p) {
    return cone_of_direction(Point{p.x - apex.x, p.y - apex.y});
}

ExactPoint doubled_bisector(const ConeLabel& label) {
    const ExactScalar r3 = ExactScalar::sqrt3();
    switch (label.sector()) {
        case 0: return {0, 2};
        case 1: return {-r3, 1};
        case 2: return {-r3, -1};
        case 3: return {0, -2};
        case 4: return {r3, -1};
        default: return {r3, 1};
    }
}

ExactScalar projection_key(const Point& apex, const ConeLabel& label, const Point& p) {
    const Point d{p.x - apex.x, p.y - apex.y};
    if (cone_of_direction(d) != label) {
        throw std::invalid_argument("point is not inside cone " + to_string(label));
    }
    const ExactPoint b = doubled_bisector(label);
    return b.x * ExactScalar(d.x) + b.y * ExactScalar(d.y);
}

namespace {

Rational cross2(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

// d strictly inside the counterclockwise sweep from a to b.
bool ccw_strictly_between(const Point& a, const Point& b, const Point& d) {
    const int c = sgn(cross2(a, b));
    if (c > 0) return sgn(cross2(a, d)) > 0 && sgn(cross2(d, b)) > 0;
    if (c < 0) {
        const bool in_closed_complement = sgn(cross2(b, d)) >= 0 && sgn(cross2(d, a)) >= 0;
        return !in_closed_complement;
    }
    if (sgn(a.x * b.x + a.y * b.y) > 0) return false;
    return sgn(cross2(a, d)) > 0;
}

}  // namespace

ApexFrame::ApexFrame(const Scene& scene, VertexId apex, const std::optional<Incidence>& inc)
    : apex_(apex), origin_(scene.vertices.at(apex)) {
    if (!inc) return;
    has_wedge_ = true;
    const Point& next = scene.vertices.at(inc->next);
    const Point& prev = scene.vertices.at(inc->prev);
    to_next_ = Point{next.x - origin_.x, next.y - origin_.y};
    to_prev_ = Point{prev.x - origin_.x, prev.y - origin_.y};
    try {
        const ConeLabel cn = cone_of_direction(to_next_);
        const ConeLabel cp = cone_of_direction(to_prev_);
        if (cn == cp && sgn(cross2(to_next_, to_prev_)) > 0) split_ = cn;
    } catch (const GeneralPositionError&) {
        // An obstacle edge on a cone boundary never splits a cone.
    }
}

bool ApexFrame::inside_wedge(const Point& d) const {
    return has_wedge_ && ccw_strictly_between(to_next_, to_prev_, d);
}

SubconeRef ApexFrame::classify(const Point& p) const {
    const Point d{p.x - origin_.x, p.y - origin_.y};
    const ConeLabel label = cone_of_direction(d);
    if (inside_wedge(d)) {
        throw std::invalid_argument("direction from vertex " + std::to_string(apex_) +
                                    " points into its own obstacle");
    }
    Side side = Side::Whole;
    if (split_ && *split_ == label) side = sgn(cross2(to_prev_, d)) >= 0 ? Side::Left : Side::Right;
    return SubconeRef{apex_, label, side};
}

SubconeRef subcone_of(const Scene& scene, VertexId apex, VertexId p) {
    std::optional<Incidence> inc;
    for (std::size_t k = 0; k < scene.obstacles.size() && !inc; ++k) {
        const auto& obs = scene.obstacles[k];
        const std::size_t m = obs.size();
        for (std::size_t i = 0; i < m; ++i) {
            if (obs[i] == apex) {
                inc = Incidence{k, obs[(i + m - 1) % m], obs[(i + 1) % m]};
                break;
            }
        }
    }
    return ApexFrame(scene, apex, inc).classify(scene.vertices.at(p));
}

CanonicalTriangle canonical_triangle(const Point& u, const Point& v) {
    const ConeLabel label = cone_of(u, v);
    if (!label.positive()) {
        throw std::invalid_argument("canonical triangle needs v in a positive cone of u");
    }
    const ExactPoint b2 = doubled_bisector(label);
    const ExactPoint b{b2.x / 2, b2.y / 2};
    const ExactPoint perp{-b.y, b.x};
    const ExactScalar dx(v.x - u.x), dy(v.y - u.y);
    const ExactScalar h = dx * b.x + dy * b.y;
    const ExactScalar half_width = h / ExactScalar::sqrt3();
    const ExactPoint apex{ExactScalar(u.x), ExactScalar(u.y)};
    const ExactPoint m{apex.x + h * b.x, apex.y + h * b.y};
    return CanonicalTriangle{
        apex,
        ExactPoint{m.x + half_width * perp.x, m.y + half_width * perp.y},
        ExactPoint{m.x - half_width * perp.x, m.y - half_width * perp.y},
        m,
    };
}

}  // namespace polyspan
