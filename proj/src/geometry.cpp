#include "polyspan/geometry.hpp"

#include <algorithm>

namespace polyspan {

Rational cross(const Point& p, const Point& q, const Point& r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

Orientation orient(const Point& p, const Point& q, const Point& r) {
    return static_cast<Orientation>(sgn(cross(p, q, r)));
}

namespace {

bool within_box(const Point& r, const Point& p, const Point& q) {
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
           std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
}

// Parameter of r along pq, assuming r is on the supporting line.
Rational param_along(const Point& r, const Point& p, const Point& q) {
    if (p.x != q.x) return (r.x - p.x) / (q.x - p.x);
    return (r.y - p.y) / (q.y - p.y);
}

}  // namespace

bool on_closed_segment(const Point& r, const Point& p, const Point& q) {
    return orient(p, q, r) == Orientation::Collinear && within_box(r, p, q);
}

bool on_open_segment(const Point& r, const Point& p, const Point& q) {
    return r != p && r != q && on_closed_segment(r, p, q);
}

bool segments_cross_strictly(const Segment& a, const Segment& b) {
    const int o1 = to_int(orient(a.p, a.q, b.p));
    const int o2 = to_int(orient(a.p, a.q, b.q));
    const int o3 = to_int(orient(b.p, b.q, a.p));
    const int o4 = to_int(orient(b.p, b.q, a.q));
    return o1 * o2 < 0 && o3 * o4 < 0;
}

bool segments_properly_intersect(const Segment& a, const Segment& b) {
    const int o1 = to_int(orient(a.p, a.q, b.p));
    const int o2 = to_int(orient(a.p, a.q, b.q));
    const int o3 = to_int(orient(b.p, b.q, a.p));
    const int o4 = to_int(orient(b.p, b.q, a.q));
    if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return o1 != o2 && o3 != o4;
    if (o1 == 0 && o2 == 0) {
        // Collinear: positive-length overlap of the parameter intervals.
        Rational t0 = param_along(b.p, a.p, a.q);
        Rational t1 = param_along(b.q, a.p, a.q);
        if (t0 > t1) std::swap(t0, t1);
        return std::max(t0, Rational(0)) < std::min(t1, Rational(1));
    }
    // Any remaining contact is at an endpoint of one of the segments.
    return false;
}

bool segments_touch(const Segment& a, const Segment& b) {
    const int o1 = to_int(orient(a.p, a.q, b.p));
    const int o2 = to_int(orient(a.p, a.q, b.q));
    const int o3 = to_int(orient(b.p, b.q, a.p));
    const int o4 = to_int(orient(b.p, b.q, a.q));
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return (o1 == 0 && within_box(b.p, a.p, a.q)) || (o2 == 0 && within_box(b.q, a.p, a.q)) ||
           (o3 == 0 && within_box(a.p, b.p, b.q)) || (o4 == 0 && within_box(a.q, b.p, b.q));
}

Containment point_in_polygon(const Point& pt, std::span<const Point> polygon) {
    const std::size_t n = polygon.size();
    int winding = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = polygon[i];
        const Point& b = polygon[(i + 1) % n];
        if (on_closed_segment(pt, a, b)) return Containment::Boundary;
        if (a.y <= pt.y) {
            if (b.y > pt.y && orient(a, b, pt) == Orientation::CCW) ++winding;
        } else if (b.y <= pt.y && orient(a, b, pt) == Orientation::CW) {
            --winding;
        }
    }
    return winding != 0 ? Containment::Inside : Containment::Outside;
}

bool segment_properly_intersects_polygon(const Segment& s, std::span<const Point> polygon) {
    const std::size_t n = polygon.size();
    if (n < 3) return false;

    const Rational min_x = std::min(s.p.x, s.q.x), max_x = std::max(s.p.x, s.q.x);
    const Rational min_y = std::min(s.p.y, s.q.y), max_y = std::max(s.p.y, s.q.y);
    Rational px0 = polygon[0].x, px1 = polygon[0].x, py0 = polygon[0].y, py1 = polygon[0].y;
    for (const Point& v : polygon) {
        px0 = std::min(px0, v.x);
        px1 = std::max(px1, v.x);
        py0 = std::min(py0, v.y);
        py1 = std::max(py1, v.y);
    }
    if (max_x < px0 || px1 < min_x || max_y < py0 || py1 < min_y) return false;

    for (std::size_t i = 0; i < n; ++i) {
        if (segments_cross_strictly(s, Segment{polygon[i], polygon[(i + 1) % n]})) return true;
    }

    // No transversal crossing: split s at the polygon vertices it passes
    // through; each piece is then wholly inside, outside, or on the boundary.
    std::vector<Rational> cuts{Rational(0), Rational(1)};
    for (const Point& v : polygon) {
        if (on_open_segment(v, s.p, s.q)) cuts.push_back(param_along(v, s.p, s.q));
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rational t = (cuts[i] + cuts[i + 1]) / 2;
        const Point mid{s.p.x + t * (s.q.x - s.p.x), s.p.y + t * (s.q.y - s.p.y)};
        if (point_in_polygon(mid, polygon) == Containment::Inside) return true;
    }
    return false;
}

Rational signed_area2(std::span<const Point> polygon) {
    Rational area = 0;
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = polygon[i];
        const Point& b = polygon[(i + 1) % n];
        area += a.x * b.y - a.y * b.x;
    }
    return area;
}

}  // namespace polyspan
