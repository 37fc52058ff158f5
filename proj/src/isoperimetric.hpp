#pragma once

#include <vector>

namespace hyptri {

/// Regular n-gon of a given perimeter, solved through its central
/// triangulation: n isoceles triangles with apex angle 2 pi / n at the
/// center and legs equal to the circumradius.
struct RegularPolygonSpec {
    int n;
    double perimeter;
    double circumradius;
    double area;
};

/// One fixed-angle area-improvement step: freeze two sides of a triangle
/// and open the included angle to the area-optimal value. The optimized
/// area never falls below the original one.
struct ReflectionStep {
    double original_area;
    double optimized_area;
};

/// Solves the circumradius by bisection (1e-12 on the radius) so n sides
/// sum to the perimeter; area is n times the central-triangle defect.
RegularPolygonSpec regular_polygon(int n, double perimeter);

/// Area enclosed by the circle of the given circumference:
/// 2 pi sinh(r) = perimeter, area = 2 pi (cosh(r) - 1). The polygon
/// sequence above converges to this value, which is how the tests pin it.
double circle_area_for_perimeter(double perimeter);

ReflectionStep reflection_step_check(double b, double c, double alpha);

}  // namespace hyptri
