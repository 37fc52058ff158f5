#pragma once

#include <optional>

#include "error.hpp"
#include "vec2.hpp"

namespace hyptri {

/// A point strictly inside the unit disc (the model's point primitive).
/// Construction rejects coordinates within kBoundaryMargin of the absolute:
/// inversion and distance lose all precision there.
class DiscPoint {
public:
    static constexpr double kBoundaryMargin = 1e-9;

    DiscPoint(double x, double y);

    double x() const { return v_.x; }
    double y() const { return v_.y; }
    Vec2 vec() const { return v_; }

private:
    Vec2 v_;
};

/// Image of an interior non-center point under inversion in the absolute;
/// always strictly outside the unit circle.
class InversePoint {
public:
    InversePoint(double x, double y);

    double x() const { return v_.x; }
    double y() const { return v_.y; }
    Vec2 vec() const { return v_; }

private:
    Vec2 v_;
};

/// A hyperbolic line: a diameter of the disc, or a circular arc meeting the
/// absolute at right angles. Arcs satisfy |center|^2 = 1 + radius^2; the
/// constructor enforces this up to 1e-12 relative to |center|^2.
class Geodesic {
public:
    static Geodesic diameter(Vec2 direction);
    static Geodesic arc(Vec2 center, double radius);

    bool is_diameter() const { return is_diameter_; }
    Vec2 direction() const;  // diameters only
    Vec2 center() const;     // arcs only
    double radius() const;   // arcs only

    /// Unit tangent at a point of the curve. Orientation is deterministic
    /// but not meaningful; orient against a reference ray when it matters.
    Vec2 tangent_at(Vec2 v) const;

    /// Signed Euclidean offset of p from the curve. For arcs this is
    /// computed from |p|^2 + 1 - 2 p.center, which is exact on orthogonal
    /// circles and avoids the |p-center|^2 - radius^2 cancellation.
    double signed_offset(Vec2 p) const;

    bool contains(Vec2 p, double tol) const { return std::abs(signed_offset(p)) <= tol; }

private:
    Geodesic() = default;

    bool is_diameter_ = true;
    Vec2 data_;           // unit direction (diameter) or Euclidean center (arc)
    double radius_ = 0.0; // arcs only
};

/// Hyperbolic circle given by its hyperbolic center and radius.
struct HyperbolicCircle {
    DiscPoint center;
    double radius;  // hyperbolic, > 0

    HyperbolicCircle(DiscPoint c, double r);
};

/// Euclidean circle realizing a hyperbolic circle inside the disc.
struct CircleRealization {
    Vec2 center;
    double radius;
};

/// Disc automorphism z -> phase * (z - pivot) / (1 - conj(pivot) z).
/// These are exactly the orientation-preserving hyperbolic isometries.
class DiscAutomorphism {
public:
    static DiscAutomorphism identity();
    static DiscAutomorphism to_origin(const DiscPoint& a);
    static DiscAutomorphism rotation(double angle);

    DiscPoint apply(const DiscPoint& p) const;
    DiscPoint apply_inverse(const DiscPoint& p) const;

private:
    std::complex<double> pivot_{0.0, 0.0};
    std::complex<double> phase_{1.0, 0.0};
};

/// Hyperbolic distance, 2 artanh(|p-q| / |1 - conj(p) q|).
double distance(const DiscPoint& p, const DiscPoint& q);

/// p -> p / |p|^2. Undefined at the origin.
InversePoint invert_in_absolute(const DiscPoint& p);
/// Outside-in inverse; round-trips with the above.
DiscPoint invert_in_absolute(const InversePoint& p);

/// The unique geodesic through two distinct points. Points collinear with
/// the origin give a diameter; otherwise the arc is the circle through p, q
/// and the inverse image of p, which is automatically orthogonal to the
/// absolute.
Geodesic geodesic_through(const DiscPoint& p, const DiscPoint& q);

/// Unsigned angle between the tangent lines of two geodesics at a common
/// point. Line against line, so the result is at most pi/2; use
/// vertex_angle for the interior angle of a wedge.
double angle_at(const DiscPoint& v, const Geodesic& g1, const Geodesic& g2);

/// Interior angle at v of the wedge formed by the geodesic rays v->p and
/// v->q, in [0, pi].
double vertex_angle(const DiscPoint& v, const DiscPoint& p, const DiscPoint& q);

/// Isometry moving a to the disc center (the "place the vertex at the
/// origin" normalization).
DiscAutomorphism mobius_to_origin(const DiscPoint& a);

/// Euclidean circle realizing a hyperbolic circle. Centered circles realize
/// concentrically with Euclidean radius tanh(r/2); the general case is the
/// Moebius transport of that.
CircleRealization circle_realization(const HyperbolicCircle& c);

/// Point at hyperbolic distance `dist` from `from` along the geodesic
/// toward `toward`.
DiscPoint point_along(const DiscPoint& from, const DiscPoint& toward, double dist);

/// Equidistant point of p and q on their geodesic.
DiscPoint hyperbolic_midpoint(const DiscPoint& p, const DiscPoint& q);

/// Hyperbolic circumcenter of three points, when the circumscribed curve is
/// a compact circle. Empty when the Euclidean circumcircle of the points
/// meets or exits the absolute (horocycle/equidistant case). Throws
/// kCollinearPoints if the points lie on one geodesic.
std::optional<DiscPoint> circumcenter(const DiscPoint& p, const DiscPoint& q, const DiscPoint& r);

}  // namespace hyptri
