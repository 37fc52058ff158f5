#pragma once

#include <array>
#include <vector>

#include "triangle.hpp"

namespace hyptri {

/// The area-maximal triangle over all triangles with two fixed side lengths
/// b = AC and c = AB, produced by the tangent construction: A at the
/// origin, B on the positive x-axis, and C the tangency point of the upper
/// tangent from B' to the circle omega of hyperbolic radius b about A.
struct MaxAreaSolution {
    HyperbolicTriangle triangle;
    InversePoint b_inverse;   // B'
    HyperbolicCircle omega;   // center A, hyperbolic radius b
    double alpha_star;        // apex angle, arccos(tanh(b/2) tanh(c/2))
    double s_star;            // maximal area, 2 arcsin(tanh(b/2) tanh(c/2))
    double a_star;            // third side, 2 arsinh(hypot(sinh(b/2), sinh(c/2)))
};

struct BruteForceResult {
    double alpha_hat;
    double s_hat;
};

/// Residuals of the six equivalent optimality conditions, measured on the
/// triangle's realized geometry:
///   [0] gap to the brute-force area maximum for the measured sides
///   [1] |alpha - (beta + gamma)|          (with alpha < pi/2 required)
///   [2] circumcenter-to-midpoint(BC) distance
///   [3] |sin(S/2) - tanh(b/2) tanh(c/2)|
///   [4] |cos(alpha) - tanh(b/2) tanh(c/2)|
///   [5] |sinh^2(a/2) - sinh^2(b/2) - sinh^2(c/2)|
struct ConditionReport {
    std::array<double, 6> residuals;
    bool alpha_acute;
    bool circumcircle_compact;  // false: residual[2] is +inf

    bool passes(double tol) const;
    double worst() const;
};

struct AlphaSurface {
    std::vector<double> b_grid;
    std::vector<double> c_grid;
    std::vector<std::vector<double>> alpha;  // alpha[i][j] for (b_grid[i], c_grid[j])
};

/// Convergence of the construction toward its flat-geometry counterpart as
/// both fixed sides shrink to epsilon: apex angle to pi/2, area to
/// (1/2) b c sin(alpha), third side squared to b^2 + c^2.
struct EuclideanLimitReport {
    double epsilon;
    double alpha_gap;        // |alpha* - pi/2|
    double area_ratio_gap;   // |S* / ((1/2) eps^2 sin alpha*) - 1|
    double pythagoras_gap;   // |a*^2 / (2 eps^2) - 1|
};

/// Closed-form apex angle of the optimal triangle.
double alpha_star(double b, double c);

/// Largest side length whose canonical placement still clears the
/// disc-boundary guard; tanh saturates in doubles soon after.
double max_constructible_side();

MaxAreaSolution construct_max_area(double b, double c);

/// Independent optimum: 1024-point scan of the area over the apex angle,
/// refined by golden-section search to a 1e-10 bracket.
BruteForceResult brute_force_optimum(double b, double c);

ConditionReport check_conditions(const HyperbolicTriangle& t);
ConditionReport check_conditions(const MaxAreaSolution& sol);

AlphaSurface alpha_star_surface(const std::vector<double>& b_grid,
                                const std::vector<double>& c_grid);

EuclideanLimitReport euclidean_limit_report(double epsilon);

}  // namespace hyptri
