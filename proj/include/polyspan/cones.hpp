#pragma once

#include "polyspan/scene.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace polyspan {

enum class ConeSign { Positive, Negative };

/// One of the six cones around an apex. Counterclockwise from the upward
/// positive cone the order is C0, -C2, C1, -C0, C2, -C1; each spans 60 degrees.
struct ConeLabel {
    ConeSign sign = ConeSign::Positive;
    int index = 0;  // 0, 1 or 2

    bool positive() const { return sign == ConeSign::Positive; }
    /// Position 0..5 in counterclockwise order starting at C0.
    int sector() const;
    static ConeLabel from_sector(int sector);
    ConeLabel opposite() const { return {positive() ? ConeSign::Negative : ConeSign::Positive, index}; }

    friend auto operator<=>(const ConeLabel&, const ConeLabel&) = default;
};

std::string to_string(const ConeLabel& label);

enum class Side { Whole, Left, Right };

const char* to_string(Side side);

/// A cone at an apex, or one half of it when the apex's obstacle wedge lies
/// strictly inside the cone. Left is the counterclockwise half.
struct SubconeRef {
    VertexId apex = 0;
    ConeLabel label;
    Side side = Side::Whole;

    friend auto operator<=>(const SubconeRef&, const SubconeRef&) = default;
};

std::string to_string(const SubconeRef& ref);

/// Cone containing direction d. Throws GeneralPositionError for a direction
/// on a cone boundary (including the zero vector).
ConeLabel cone_of_direction(const Point& d);
ConeLabel cone_of(const Point& apex, const Point& p);

/// Twice the unit bisector of a cone, as a vector in Q(sqrt3)^2.
ExactPoint doubled_bisector(const ConeLabel& label);

/// (p - apex) . (2 * unit bisector). Strictly increasing in the projected
/// distance along the bisector. Throws std::invalid_argument if p is not in
/// the cone.
ExactScalar projection_key(const Point& apex, const ConeLabel& label, const Point& p);

/// Obstacle geometry at one apex, precomputed for repeated subcone queries.
class ApexFrame {
public:
    ApexFrame(const Scene& scene, VertexId apex, const std::optional<Incidence>& inc);

    VertexId apex() const { return apex_; }
    /// Cone split by the obstacle wedge, if any.
    std::optional<ConeLabel> split_cone() const { return split_; }
    /// Throws std::invalid_argument when p points into the open obstacle
    /// wedge, GeneralPositionError when p is on a cone boundary.
    SubconeRef classify(const Point& p) const;
    /// True iff direction d is strictly inside the obstacle wedge.
    bool inside_wedge(const Point& d) const;

private:
    VertexId apex_;
    Point origin_;
    bool has_wedge_ = false;
    Point to_next_;  // wedge spans counterclockwise from to_next_ to to_prev_
    Point to_prev_;
    std::optional<ConeLabel> split_;
};

SubconeRef subcone_of(const Scene& scene, VertexId apex, VertexId p);

struct CanonicalTriangle {
    ExactPoint apex;
    ExactPoint a;  // counterclockwise corner
    ExactPoint b;
    ExactPoint m;  // midpoint of ab
};

/// Equilateral triangle bounded by the positive cone of u containing v and
/// the line through v perpendicular to that cone's bisector. Throws
/// std::invalid_argument if v is in a negative cone of u.
CanonicalTriangle canonical_triangle(const Point& u, const Point& v);

}  // namespace polyspan
