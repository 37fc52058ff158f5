#include "triangle.hpp"

#include <cmath>
#include <numbers>

namespace hyptri {

namespace {

void require_sides(double b, double c) {
    if (!(b > 0.0) || !(c > 0.0) || !std::isfinite(b) || !std::isfinite(c))
        fail(ErrorCode::kInvalidArgument, "side lengths must be positive and finite");
}

void require_opening_angle(double alpha) {
    if (!(alpha > 0.0) || !(alpha < std::numbers::pi))
        fail(ErrorCode::kDomain, "included angle must lie in (0, pi)");
}

}  // namespace

TriangleMetrics measure(const HyperbolicTriangle& t) {
    const Vec2 a = t.a_vertex.vec(), b = t.b_vertex.vec(), c = t.c_vertex.vec();
    const double span = std::max({(b - a).norm(), (c - a).norm(), (c - b).norm()});
    if ((b - a).norm() < 1e-15 || (c - a).norm() < 1e-15 || (c - b).norm() < 1e-15)
        fail(ErrorCode::kDegenerateTriangle, "triangle has coincident vertices");
    {
        const Geodesic ab = geodesic_through(t.a_vertex, t.b_vertex);
        const double scale = ab.is_diameter() ? 1.0 : std::max(1.0, ab.center().norm());
        if (ab.contains(c, 1e-12 * scale * std::max(1.0, span)))
            fail(ErrorCode::kDegenerateTriangle, "triangle vertices lie on one geodesic");
    }

    TriangleMetrics m{};
    m.side_a = distance(t.b_vertex, t.c_vertex);
    m.side_b = distance(t.a_vertex, t.c_vertex);
    m.side_c = distance(t.a_vertex, t.b_vertex);
    m.angle_alpha = vertex_angle(t.a_vertex, t.b_vertex, t.c_vertex);
    m.angle_beta = vertex_angle(t.b_vertex, t.a_vertex, t.c_vertex);
    m.angle_gamma = vertex_angle(t.c_vertex, t.a_vertex, t.b_vertex);
    m.defect = std::numbers::pi - (m.angle_alpha + m.angle_beta + m.angle_gamma);
    return m;
}

double side_from_cosine_theorem(double b, double c, double alpha) {
    require_sides(b, c);
    require_opening_angle(alpha);
    double arg = std::cosh(b) * std::cosh(c) - std::sinh(b) * std::sinh(c) * std::cos(alpha);
    if (arg < 1.0) {
        if (arg < 1.0 - 1e-9)
            fail(ErrorCode::kDomain, "cosine-theorem argument fell below 1");
        arg = 1.0;  // rounding guard; analytically arg >= cosh(b - c) >= 1
    }
    return std::acosh(arg);
}

double area_from_sides_and_angle(double b, double c, double alpha) {
    require_sides(b, c);
    require_opening_angle(alpha);
    const double num = 1.0 / (std::tanh(0.5 * b) * std::tanh(0.5 * c)) - std::cos(alpha);
    // atan2(sin, num) is the (0, pi) branch of arccot(num / sin); num > 0
    // always since coth coth > 1, so S stays below pi.
    return 2.0 * std::atan2(std::sin(alpha), num);
}

HyperbolicTriangle place_triangle(double b, double c, double alpha) {
    require_sides(b, c);
    require_opening_angle(alpha);
    const double tb = std::tanh(0.5 * b);
    const double tc = std::tanh(0.5 * c);
    return {DiscPoint{0.0, 0.0}, DiscPoint{tc, 0.0},
            DiscPoint{tb * std::cos(alpha), tb * std::sin(alpha)}};
}

}  // namespace hyptri
