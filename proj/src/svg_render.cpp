#include "svg_render.hpp"

#include <cmath>
#include <cstdio>

namespace hyptri {

namespace {

// Disc coordinates to pixels: 500 px per unit, y flipped to mathematical
// orientation.
Vec2 to_px(Vec2 v) { return {500.0 * (1.0 + v.x), 500.0 * (1.0 - v.y)}; }

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

void circle(std::string& out, Vec2 center, double radius, const char* style) {
    const Vec2 c = to_px(center);
    out += "  <circle cx=\"" + num(c.x) + "\" cy=\"" + num(c.y) + "\" r=\"" +
           num(500.0 * radius) + "\" " + style + "/>\n";
}

void line(std::string& out, Vec2 a, Vec2 b, const char* style) {
    const Vec2 pa = to_px(a), pb = to_px(b);
    out += "  <line x1=\"" + num(pa.x) + "\" y1=\"" + num(pa.y) + "\" x2=\"" + num(pb.x) +
           "\" y2=\"" + num(pb.y) + "\" " + style + "/>\n";
}

void dot_with_label(std::string& out, Vec2 p, const char* label, Vec2 nudge) {
    const Vec2 c = to_px(p);
    out += "  <circle cx=\"" + num(c.x) + "\" cy=\"" + num(c.y) +
           "\" r=\"5\" fill=\"#222222\"/>\n";
    out += "  <text x=\"" + num(c.x + nudge.x) + "\" y=\"" + num(c.y + nudge.y) +
           "\" font-family=\"sans-serif\" font-size=\"28\">" + label + "</text>\n";
}

// Path continuation from a to b along their geodesic. The disc part of an
// orthogonal circle subtends less than pi, so the minor arc is always the
// right one; the sweep flag flips with the orientation of (a, b) around the
// arc center (mathematically CCW renders as sweep 0 once y is flipped).
std::string segment_to(Vec2 a, Vec2 b, const Geodesic& g) {
    const Vec2 pb = to_px(b);
    if (g.is_diameter())
        return "L " + num(pb.x) + " " + num(pb.y);
    const int sweep = cross(a - g.center(), b - g.center()) > 0.0 ? 0 : 1;
    const std::string r = num(500.0 * g.radius());
    return "A " + r + " " + r + " 0 0 " + std::to_string(sweep) + " " + num(pb.x) + " " +
           num(pb.y);
}

}  // namespace

std::string render_construction_svg(const MaxAreaSolution& sol) {
    const Vec2 a = sol.triangle.a_vertex.vec();
    const Vec2 b = sol.triangle.b_vertex.vec();
    const Vec2 c = sol.triangle.c_vertex.vec();
    const Vec2 b_inv = sol.b_inverse.vec();

    // Chord of the absolute through C aimed at B'.
    const Vec2 dir = (b_inv - c).normalized();
    const double mid = -dot(c, dir);
    const double half = std::sqrt(std::max(0.0, mid * mid + 1.0 - c.squared_norm()));
    const Vec2 chord_lo = c + dir * (mid - half);
    const Vec2 chord_hi = c + dir * (mid + half);

    // The disc itself occupies the left 1000 x 1000 square; the document
    // grows to the right so B' stays visible. For short side c the inverse
    // point runs off toward infinity, so it is capped out of the frame and
    // the tangent-line extension is truncated at the right edge instead.
    constexpr double kInverseExtent = 6.0;
    const bool show_b_inverse = b_inv.norm() <= kInverseExtent;
    const double x_max = show_b_inverse ? std::max(1.0, b_inv.x + 0.15) : 1.05;
    const double width = 500.0 * (1.0 + x_max);

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
           "\" height=\"1000\" viewBox=\"0 0 " + num(width) + " 1000\">\n";
    out += "  <rect width=\"" + num(width) + "\" height=\"1000\" fill=\"#ffffff\"/>\n";

    circle(out, {0.0, 0.0}, 1.0, "fill=\"none\" stroke=\"#222222\" stroke-width=\"2\"");
    const CircleRealization omega = circle_realization(sol.omega);
    circle(out, omega.center, omega.radius,
           "fill=\"none\" stroke=\"#4477aa\" stroke-width=\"2\" stroke-dasharray=\"10 6\"");

    line(out, chord_lo, chord_hi, "stroke=\"#cc6677\" stroke-width=\"2\"");
    Vec2 extension_end = b_inv;
    if (!show_b_inverse && dir.x > 0.0)
        extension_end = chord_hi + dir * ((x_max - chord_hi.x) / dir.x);
    line(out, chord_hi, extension_end,
         "stroke=\"#cc6677\" stroke-width=\"2\" stroke-dasharray=\"4 6\"");

    const Geodesic ab = geodesic_through(sol.triangle.a_vertex, sol.triangle.b_vertex);
    const Geodesic bc = geodesic_through(sol.triangle.b_vertex, sol.triangle.c_vertex);
    const Geodesic ca = geodesic_through(sol.triangle.c_vertex, sol.triangle.a_vertex);
    const Vec2 a_px = to_px(a);
    out += "  <path d=\"M " + num(a_px.x) + " " + num(a_px.y);
    out += " " + segment_to(a, b, ab);
    out += " " + segment_to(b, c, bc);
    out += " " + segment_to(c, a, ca) + " Z\"";
    out += " fill=\"#4477aa\" fill-opacity=\"0.15\" stroke=\"#222222\" stroke-width=\"2.5\"/>\n";

    dot_with_label(out, a, "A", {-30.0, 30.0});
    dot_with_label(out, b, "B", {10.0, 34.0});
    dot_with_label(out, c, "C", {10.0, -14.0});
    if (show_b_inverse) dot_with_label(out, b_inv, "B'", {10.0, -14.0});

    out += "</svg>\n";
    return out;
}

}  // namespace hyptri
