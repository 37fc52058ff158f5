#include "isoperimetric.hpp"

#include <cmath>
#include <numbers>

#include "error.hpp"
#include "max_area.hpp"
#include "numeric.hpp"
#include "triangle.hpp"

namespace hyptri {

RegularPolygonSpec regular_polygon(int n, double perimeter) {
    if (n < 3)
        fail(ErrorCode::kInvalidArgument, "a polygon needs at least 3 vertices");
    if (!(perimeter > 0.0) || !std::isfinite(perimeter))
        fail(ErrorCode::kInvalidArgument, "perimeter must be positive and finite");

    const double apex = 2.0 * std::numbers::pi / n;
    const auto total_side = [n, apex](double r) {
        return n * side_from_cosine_theorem(r, r, apex);
    };
    const double r = bisect_increasing(total_side, perimeter, 1e-12, 1.0, 1e-12);
    return RegularPolygonSpec{n, perimeter, r, n * area_from_sides_and_angle(r, r, apex)};
}

double circle_area_for_perimeter(double perimeter) {
    if (!(perimeter > 0.0) || !std::isfinite(perimeter))
        fail(ErrorCode::kInvalidArgument, "perimeter must be positive and finite");
    const double r = std::asinh(perimeter / (2.0 * std::numbers::pi));
    return 2.0 * std::numbers::pi * (std::cosh(r) - 1.0);
}

ReflectionStep reflection_step_check(double b, double c, double alpha) {
    const double original = area_from_sides_and_angle(b, c, alpha);
    return ReflectionStep{original, construct_max_area(b, c).s_star};
}

}  // namespace hyptri
