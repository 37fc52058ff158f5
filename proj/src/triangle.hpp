#pragma once

#include "disc.hpp"

namespace hyptri {

/// Triangle in the disc; vertices only, metrics are derived by measure().
/// Deliberately unvalidated so degenerate configurations can be built for
/// error-path tests.
struct HyperbolicTriangle {
    DiscPoint a_vertex;  // A
    DiscPoint b_vertex;  // B
    DiscPoint c_vertex;  // C
};

/// Side lengths, angles, and defect-based area of a triangle. Sides follow
/// the a = BC, b = AC, c = AB convention with angles opposite their sides.
struct TriangleMetrics {
    double side_a;
    double side_b;
    double side_c;
    double angle_alpha;
    double angle_beta;
    double angle_gamma;
    double defect;  // pi - angle sum; equals the area
};

/// Measures a triangle. Throws kDegenerateTriangle for coincident or
/// collinear vertices.
TriangleMetrics measure(const HyperbolicTriangle& t);

/// Third side from two sides and the included angle:
/// a = arcosh(cosh b cosh c - sinh b sinh c cos alpha).
double side_from_cosine_theorem(double b, double c, double alpha);

/// Area from two sides and the included angle, the curved counterpart of
/// (1/2) b c sin(alpha):
/// cot(S/2) = (coth(b/2) coth(c/2) - cos alpha) / sin alpha.
double area_from_sides_and_angle(double b, double c, double alpha);

/// Canonical placement of the (b, c, alpha) triangle: A at the origin, B on
/// the positive x-axis at Euclidean radius tanh(c/2), C at radius tanh(b/2)
/// rotated by alpha. The conformal angle at A is then exactly alpha.
HyperbolicTriangle place_triangle(double b, double c, double alpha);

}  // namespace hyptri
