#include "max_area.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "numeric.hpp"

namespace hyptri {

namespace {

constexpr double kPi = std::numbers::pi;

void require_sides(double b, double c) {
    if (!(b > 0.0) || !(c > 0.0) || !std::isfinite(b) || !std::isfinite(c))
        fail(ErrorCode::kInvalidArgument, "side lengths must be positive and finite");
}

}  // namespace

bool ConditionReport::passes(double tol) const {
    if (!alpha_acute || !circumcircle_compact)
        return false;
    return std::all_of(residuals.begin(), residuals.end(), [tol](double r) { return r < tol; });
}

double ConditionReport::worst() const {
    return *std::max_element(residuals.begin(), residuals.end());
}

double alpha_star(double b, double c) {
    require_sides(b, c);
    return std::acos(std::tanh(0.5 * b) * std::tanh(0.5 * c));
}

double max_constructible_side() {
    // tanh(side/2) must stay below the DiscPoint boundary guard.
    return 2.0 * std::atanh(1.0 - DiscPoint::kBoundaryMargin);
}

MaxAreaSolution construct_max_area(double b, double c) {
    require_sides(b, c);
    const double tb = std::tanh(0.5 * b);
    const double tc = std::tanh(0.5 * c);
    if (std::max(tb, tc) > 1.0 - DiscPoint::kBoundaryMargin)
        fail(ErrorCode::kDomain,
             "side saturates the disc realization; sides must stay below max_constructible_side()");

    const double astar = std::acos(tb * tc);
    // C = tanh(b/2) (cos a*, sin a*) is the upper tangency point from B' to
    // omega: OC perpendicular to CB' reduces to cos a* = tanh(b/2) tanh(c/2).
    HyperbolicTriangle tri = place_triangle(b, c, astar);
    return MaxAreaSolution{
        tri,
        invert_in_absolute(tri.b_vertex),
        HyperbolicCircle{tri.a_vertex, b},
        astar,
        2.0 * std::asin(tb * tc),
        2.0 * std::asinh(std::hypot(std::sinh(0.5 * b), std::sinh(0.5 * c))),
    };
}

BruteForceResult brute_force_optimum(double b, double c) {
    require_sides(b, c);
    const auto area = [b, c](double alpha) { return area_from_sides_and_angle(b, c, alpha); };

    // Seed with a grid scan so the golden-section bracket does not lean on
    // unimodality alone.
    constexpr int kGridPoints = 1024;
    int best = 0;
    double best_area = -1.0;
    for (int i = 0; i < kGridPoints; ++i) {
        const double alpha = kPi * (i + 0.5) / kGridPoints;
        const double s = area(alpha);
        if (s > best_area) {
            best_area = s;
            best = i;
        }
    }
    const double lo = std::max(kPi * (best - 0.5) / kGridPoints, 1e-12);
    const double hi = std::min(kPi * (best + 1.5) / kGridPoints, kPi - 1e-12);
    const ScalarMax m = golden_section_maximize(area, lo, hi, 1e-10);
    return {m.arg, m.value};
}

ConditionReport check_conditions(const HyperbolicTriangle& t) {
    const TriangleMetrics m = measure(t);
    ConditionReport rep{};
    rep.alpha_acute = m.angle_alpha < 0.5 * kPi;
    rep.circumcircle_compact = true;

    const BruteForceResult bf = brute_force_optimum(m.side_b, m.side_c);
    rep.residuals[0] = std::abs(bf.s_hat - m.defect);
    rep.residuals[1] = std::abs(m.angle_alpha - (m.angle_beta + m.angle_gamma));

    if (const auto center = circumcenter(t.a_vertex, t.b_vertex, t.c_vertex)) {
        rep.residuals[2] = distance(*center, hyperbolic_midpoint(t.b_vertex, t.c_vertex));
    } else {
        rep.residuals[2] = std::numeric_limits<double>::infinity();
        rep.circumcircle_compact = false;
    }

    const double tt = std::tanh(0.5 * m.side_b) * std::tanh(0.5 * m.side_c);
    rep.residuals[3] = std::abs(std::sin(0.5 * m.defect) - tt);
    rep.residuals[4] = std::abs(std::cos(m.angle_alpha) - tt);

    const double sa = std::sinh(0.5 * m.side_a), sb = std::sinh(0.5 * m.side_b),
                 sc = std::sinh(0.5 * m.side_c);
    rep.residuals[5] = std::abs(sa * sa - sb * sb - sc * sc);
    return rep;
}

ConditionReport check_conditions(const MaxAreaSolution& sol) {
    return check_conditions(sol.triangle);
}

AlphaSurface alpha_star_surface(const std::vector<double>& b_grid,
                                const std::vector<double>& c_grid) {
    AlphaSurface surface{b_grid, c_grid, {}};
    surface.alpha.reserve(b_grid.size());
    for (const double b : b_grid) {
        std::vector<double> row;
        row.reserve(c_grid.size());
        for (const double c : c_grid)
            row.push_back(alpha_star(b, c));
        surface.alpha.push_back(std::move(row));
    }
    return surface;
}

EuclideanLimitReport euclidean_limit_report(double epsilon) {
    if (!(epsilon > 0.0) || !(epsilon <= 0.1))
        fail(ErrorCode::kInvalidArgument, "epsilon must lie in (0, 0.1]");
    const double t = std::tanh(0.5 * epsilon);
    const double astar = std::acos(t * t);
    const double sstar = 2.0 * std::asin(t * t);
    const double side = 2.0 * std::asinh(std::numbers::sqrt2 * std::sinh(0.5 * epsilon));
    return EuclideanLimitReport{
        epsilon,
        std::abs(astar - 0.5 * kPi),
        std::abs(sstar / (0.5 * epsilon * epsilon * std::sin(astar)) - 1.0),
        std::abs(side * side / (2.0 * epsilon * epsilon) - 1.0),
    };
}

}  // namespace hyptri
