#pragma once

#include "polyspan/exact.hpp"

#include <span>
#include <vector>

namespace polyspan {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
};

/// A point whose coordinates live in Q(sqrt 3); used for canonical-triangle corners.
struct ExactPoint {
    ExactScalar x;
    ExactScalar y;

    friend bool operator==(const ExactPoint&, const ExactPoint&) = default;
};

struct Segment {
    Point p;
    Point q;
};

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

inline int to_int(Orientation o) { return static_cast<int>(o); }

Rational cross(const Point& p, const Point& q, const Point& r);
Orientation orient(const Point& p, const Point& q, const Point& r);

/// True iff r lies on the closed segment pq.
bool on_closed_segment(const Point& r, const Point& p, const Point& q);
/// True iff r lies on the segment pq and differs from both endpoints.
bool on_open_segment(const Point& r, const Point& p, const Point& q);

/// Interiors cross at a single point (all four orientations nonzero).
bool segments_cross_strictly(const Segment& a, const Segment& b);

/// Relative interiors share a point in a crossing, or the segments overlap
/// collinearly with positive length. Touching at an endpoint is not proper.
bool segments_properly_intersect(const Segment& a, const Segment& b);

/// Closed segments share at least one point.
bool segments_touch(const Segment& a, const Segment& b);

enum class Containment { Outside, Boundary, Inside };

/// Exact winding-number test; either polygon orientation is accepted.
Containment point_in_polygon(const Point& pt, std::span<const Point> polygon);

/// True iff the relative interior of s meets the open interior of the
/// polygon. Touching vertices and running along boundary edges is allowed.
bool segment_properly_intersects_polygon(const Segment& s, std::span<const Point> polygon);

/// Twice the signed area; positive for counterclockwise boundaries.
Rational signed_area2(std::span<const Point> polygon);

}  // namespace polyspan
