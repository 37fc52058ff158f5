#include "disc.hpp"

#include <algorithm>
#include <cmath>

namespace hyptri {

namespace {

constexpr double kAlgebraicTol = 1e-12;

// Relative collinearity test: |cross(p,q)| <= 1e-12 |p||q| picks the
// diameter branch and keeps arc centers finite. Non-strict so that a point
// exactly at the origin (threshold 0) still counts as collinear.
bool collinear_with_origin(Vec2 p, Vec2 q) {
    return std::abs(cross(p, q)) <= kAlgebraicTol * p.norm() * q.norm();
}

}  // namespace

DiscPoint::DiscPoint(double x, double y) : v_{x, y} {
    if (!std::isfinite(x) || !std::isfinite(y))
        fail(ErrorCode::kInvalidArgument, "disc point coordinates must be finite");
    if (v_.norm() > 1.0 - kBoundaryMargin)
        fail(ErrorCode::kPointOutsideDisc, "point too close to the absolute");
}

InversePoint::InversePoint(double x, double y) : v_{x, y} {
    if (!std::isfinite(x) || !std::isfinite(y))
        fail(ErrorCode::kInvalidArgument, "inverse point coordinates must be finite");
    if (v_.squared_norm() <= 1.0)
        fail(ErrorCode::kInvalidArgument, "inverse point must lie strictly outside the absolute");
}

Geodesic Geodesic::diameter(Vec2 direction) {
    const double n = direction.norm();
    if (std::abs(n - 1.0) > kAlgebraicTol)
        fail(ErrorCode::kInvalidArgument, "diameter direction must be a unit vector");
    Geodesic g;
    g.is_diameter_ = true;
    g.data_ = direction / n;
    return g;
}

Geodesic Geodesic::arc(Vec2 center, double radius) {
    if (!std::isfinite(center.x) || !std::isfinite(center.y) || !std::isfinite(radius))
        fail(ErrorCode::kInvalidArgument, "arc parameters must be finite");
    if (radius <= 0.0)
        fail(ErrorCode::kInvalidArgument, "arc radius must be positive");
    const double c2 = center.squared_norm();
    // Orthogonality to the absolute. Tolerance scales with |center|^2: for
    // near-diameter arcs the raw difference cannot be resolved below
    // |center|^2 * eps in doubles.
    if (std::abs(c2 - (1.0 + radius * radius)) > kAlgebraicTol * std::max(1.0, c2))
        fail(ErrorCode::kInvalidArgument, "arc is not orthogonal to the absolute");
    Geodesic g;
    g.is_diameter_ = false;
    g.data_ = center;
    g.radius_ = radius;
    return g;
}

Vec2 Geodesic::direction() const {
    if (!is_diameter_)
        fail(ErrorCode::kInvalidArgument, "direction() is only defined for diameters");
    return data_;
}

Vec2 Geodesic::center() const {
    if (is_diameter_)
        fail(ErrorCode::kInvalidArgument, "center() is only defined for arcs");
    return data_;
}

double Geodesic::radius() const {
    if (is_diameter_)
        fail(ErrorCode::kInvalidArgument, "radius() is only defined for arcs");
    return radius_;
}

Vec2 Geodesic::tangent_at(Vec2 v) const {
    if (is_diameter_)
        return data_;
    return (v - data_).perp().normalized();
}

double Geodesic::signed_offset(Vec2 p) const {
    if (is_diameter_)
        return cross(data_, p);
    // (|p - c|^2 - r^2) / (|p - c| + r) with the numerator rewritten via
    // r^2 = |c|^2 - 1 so the large |c|^2 terms cancel symbolically.
    const double num = p.squared_norm() + 1.0 - 2.0 * dot(p, data_);
    return num / ((p - data_).norm() + radius_);
}

HyperbolicCircle::HyperbolicCircle(DiscPoint c, double r) : center(c), radius(r) {
    if (!(r > 0.0) || !std::isfinite(r))
        fail(ErrorCode::kInvalidArgument, "hyperbolic circle radius must be positive");
}

DiscAutomorphism DiscAutomorphism::identity() { return DiscAutomorphism{}; }

DiscAutomorphism DiscAutomorphism::to_origin(const DiscPoint& a) {
    DiscAutomorphism t;
    t.pivot_ = to_complex(a.vec());
    return t;
}

DiscAutomorphism DiscAutomorphism::rotation(double angle) {
    DiscAutomorphism t;
    t.phase_ = std::polar(1.0, angle);
    return t;
}

DiscPoint DiscAutomorphism::apply(const DiscPoint& p) const {
    const std::complex<double> z = to_complex(p.vec());
    const std::complex<double> w = phase_ * (z - pivot_) / (1.0 - std::conj(pivot_) * z);
    return {w.real(), w.imag()};
}

DiscPoint DiscAutomorphism::apply_inverse(const DiscPoint& p) const {
    const std::complex<double> w = to_complex(p.vec()) / phase_;
    const std::complex<double> z = (w + pivot_) / (1.0 + std::conj(pivot_) * w);
    return {z.real(), z.imag()};
}

double distance(const DiscPoint& p, const DiscPoint& q) {
    const std::complex<double> zp = to_complex(p.vec());
    const std::complex<double> zq = to_complex(q.vec());
    const double num = std::abs(zq - zp);
    const double den = std::abs(1.0 - std::conj(zp) * zq);
    return 2.0 * std::atanh(num / den);
}

InversePoint invert_in_absolute(const DiscPoint& p) {
    const double n2 = p.vec().squared_norm();
    if (n2 < 1e-300)
        fail(ErrorCode::kDegenerateInput, "the disc center has no inverse in the absolute");
    return {p.x() / n2, p.y() / n2};
}

DiscPoint invert_in_absolute(const InversePoint& p) {
    const double n2 = p.vec().squared_norm();
    return {p.x() / n2, p.y() / n2};
}

Geodesic geodesic_through(const DiscPoint& p, const DiscPoint& q) {
    const Vec2 a = p.vec(), b = q.vec();
    if ((a - b).norm() < 1e-15)
        fail(ErrorCode::kDegenerateInput, "no unique geodesic through coincident points");
    if (collinear_with_origin(a, b))
        return Geodesic::diameter((b - a).normalized());
    // Orthogonal circle through both points: 2 v.center = 1 + |v|^2 for
    // v in {p, q}. This circle also passes through p/|p|^2, reproducing the
    // point/inverse-point construction.
    const double rp = 0.5 * (1.0 + a.squared_norm());
    const double rq = 0.5 * (1.0 + b.squared_norm());
    const double det = cross(a, b);
    const Vec2 center{(rp * b.y - rq * a.y) / det, (rq * a.x - rp * b.x) / det};
    const double radius = std::sqrt(center.squared_norm() - 1.0);
    return Geodesic::arc(center, radius);
}

double angle_at(const DiscPoint& v, const Geodesic& g1, const Geodesic& g2) {
    constexpr double kOnCurveTol = 1e-9;
    if (!g1.contains(v.vec(), kOnCurveTol) || !g2.contains(v.vec(), kOnCurveTol))
        fail(ErrorCode::kPointNotOnGeodesic, "vertex does not lie on both geodesics");
    const Vec2 t1 = g1.tangent_at(v.vec());
    const Vec2 t2 = g2.tangent_at(v.vec());
    // atan2 keeps near-parallel tangents accurate where acos(dot) would lose
    // half the digits; fold to [0, pi/2] for the undirected line angle.
    const double angle = std::atan2(std::abs(cross(t1, t2)), std::abs(dot(t1, t2)));
    return angle;
}

double vertex_angle(const DiscPoint& v, const DiscPoint& p, const DiscPoint& q) {
    const Vec2 vv = v.vec();
    Vec2 tp = geodesic_through(v, p).tangent_at(vv);
    Vec2 tq = geodesic_through(v, q).tangent_at(vv);
    // Orient each tangent toward its far point. The disc part of an
    // orthogonal circle subtends less than pi, so the chord decides.
    if (dot(tp, p.vec() - vv) < 0.0) tp = -tp;
    if (dot(tq, q.vec() - vv) < 0.0) tq = -tq;
    // atan2 keeps tiny angles (near-boundary vertices) at full relative
    // precision; acos(dot) would be off by ~eps/angle there.
    return std::atan2(std::abs(cross(tp, tq)), dot(tp, tq));
}

DiscAutomorphism mobius_to_origin(const DiscPoint& a) { return DiscAutomorphism::to_origin(a); }

CircleRealization circle_realization(const HyperbolicCircle& c) {
    const double t = std::tanh(0.5 * c.radius);
    const Vec2 m = c.center.vec();
    const double mn = m.norm();
    if (mn < 1e-15)
        return {Vec2{0.0, 0.0}, t};
    // Transport the concentric realization along the diameter through the
    // center: the image circle's axis-aligned diameter endpoints are the
    // Moebius images of +-t.
    const Vec2 u = m / mn;
    const double hi = (mn + t) / (1.0 + mn * t);
    const double lo = (mn - t) / (1.0 - mn * t);
    return {u * (0.5 * (hi + lo)), 0.5 * (hi - lo)};
}

DiscPoint point_along(const DiscPoint& from, const DiscPoint& toward, double dist) {
    const DiscAutomorphism t = DiscAutomorphism::to_origin(from);
    const Vec2 image = t.apply(toward).vec();
    const double n = image.norm();
    if (n < 1e-15)
        fail(ErrorCode::kDegenerateInput, "direction point coincides with the base point");
    const Vec2 target = image * (std::tanh(0.5 * dist) / n);
    return t.apply_inverse(DiscPoint{target.x, target.y});
}

DiscPoint hyperbolic_midpoint(const DiscPoint& p, const DiscPoint& q) {
    if ((p.vec() - q.vec()).norm() < 1e-15)
        fail(ErrorCode::kDegenerateInput, "midpoint of coincident points is undefined");
    return point_along(p, q, 0.5 * distance(p, q));
}

std::optional<DiscPoint> circumcenter(const DiscPoint& p, const DiscPoint& q, const DiscPoint& r) {
    const Vec2 a = p.vec(), b = q.vec(), c = r.vec();

    // Hyperbolically collinear inputs are a caller error.
    {
        const double span = std::max({(b - a).norm(), (c - a).norm(), (c - b).norm()});
        bool on_one_geodesic = false;
        if ((b - a).norm() < 1e-15 || (c - a).norm() < 1e-15 || (c - b).norm() < 1e-15) {
            on_one_geodesic = true;
        } else {
            const Geodesic g = geodesic_through(p, q);
            const double scale = g.is_diameter() ? 1.0 : std::max(1.0, g.center().norm());
            on_one_geodesic = g.contains(c, 1e-12 * scale * std::max(1.0, span));
        }
        if (on_one_geodesic)
            fail(ErrorCode::kCollinearPoints, "circumcenter of points on one geodesic is undefined");
    }

    // Euclidean circumcircle. Hyperbolic circles are Euclidean circles in
    // the disc, so the three points lie on a hyperbolic circle exactly when
    // this one stays strictly inside the absolute.
    const double det = 2.0 * cross(b - a, c - a);
    if (std::abs(det) < 1e-300)
        return std::nullopt;  // Euclidean-collinear: circumscribed curve is an equidistant
    const double na = a.squared_norm(), nb = b.squared_norm(), nc = c.squared_norm();
    const Vec2 e{(na * (b.y - c.y) + nb * (c.y - a.y) + nc * (a.y - b.y)) / det,
                 (na * (c.x - b.x) + nb * (a.x - c.x) + nc * (b.x - a.x)) / det};
    const double radius = ((a - e).norm() + (b - e).norm() + (c - e).norm()) / 3.0;
    // The margin keeps the crossing points constructible as DiscPoints;
    // circles this close to the absolute are numerically horocycles anyway.
    if (e.norm() + radius >= 1.0 - DiscPoint::kBoundaryMargin)
        return std::nullopt;

    // The diameter geodesic through the Euclidean center is a symmetry axis
    // of the circle; the hyperbolic center is the midpoint of the two
    // crossings.
    const Vec2 u = e.norm() < 1e-15 ? Vec2{1.0, 0.0} : e.normalized();
    const DiscPoint hi{e.x + radius * u.x, e.y + radius * u.y};
    const DiscPoint lo{e.x - radius * u.x, e.y - radius * u.y};
    return hyperbolic_midpoint(hi, lo);
}

}  // namespace hyptri
