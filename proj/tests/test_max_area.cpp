#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "disc.hpp"
#include "max_area.hpp"
#include "oracles.hpp"
#include "triangle.hpp"

using namespace hyptri;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

template <typename Fn>
std::optional<ErrorCode> error_code_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("closed-form optimum at pinned values") {
    // Frozen after verifying against 40-digit arithmetic.
    const MaxAreaSolution s11 = construct_max_area(1.0, 1.0);
    CHECK(s11.alpha_star == Approx(1.3555866559926345).epsilon(1e-14));
    CHECK(s11.s_star == Approx(0.4304193416045242).epsilon(1e-14));
    CHECK(s11.a_star == Approx(1.3653329142432114).epsilon(1e-14));

    const MaxAreaSolution s12 = construct_max_area(1.0, 2.0);
    CHECK(s12.alpha_star == Approx(1.2111473112614116).epsilon(1e-14));
    CHECK(s12.s_star == Approx(0.7192980310669700).epsilon(1e-14));
    CHECK(s12.a_star == Approx(2.1392194447570509).epsilon(1e-14));

    // Closed forms satisfy their defining identities exactly.
    const double tt = std::tanh(0.5) * std::tanh(1.0);
    CHECK(std::cos(s12.alpha_star) == Approx(tt).epsilon(1e-15));
    CHECK(std::sin(0.5 * s12.s_star) == Approx(tt).epsilon(1e-15));
    const double sh2 = [] {
        const double sb = std::sinh(0.5), sc = std::sinh(1.0);
        return sb * sb + sc * sc;
    }();
    const double sha = std::sinh(0.5 * s12.a_star);
    CHECK(sha * sha == Approx(sh2).epsilon(1e-14));
}

TEST_CASE("brute force agrees with the closed form") {
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> side(0.1, 5.0);
    for (int i = 0; i < 20; ++i) {
        const double b = side(rng), c = side(rng);
        const BruteForceResult bf = brute_force_optimum(b, c);
        CHECK(std::abs(bf.alpha_hat - alpha_star(b, c)) < 1e-6);
        CHECK(std::abs(bf.s_hat - construct_max_area(b, c).s_star) < 1e-9);
    }
}

TEST_CASE("the right angle is not optimal in the curved setting") {
    const double s_right = area_from_sides_and_angle(1.0, 1.0, kPi / 2.0);
    const double s_opt = construct_max_area(1.0, 1.0).s_star;
    CHECK(s_opt > s_right + 1e-3);
    CHECK(alpha_star(1.0, 1.0) < kPi / 2.0);
}

TEST_CASE("all six optimality conditions hold on constructed solutions") {
    for (const auto& [b, c] : {std::pair{1.0, 1.0}, {2.0, 3.0}, {0.2, 4.0}}) {
        const MaxAreaSolution sol = construct_max_area(b, c);
        const ConditionReport report = check_conditions(sol);
        CHECK(report.alpha_acute);
        CHECK(report.circumcircle_compact);
        CHECK(report.worst() < 1e-9);
        CHECK(report.passes(1e-9));
        for (const double r : report.residuals) CHECK(r < 1e-9);
    }
}

TEST_CASE("perturbed apex angles fail the optimality conditions") {
    const double b = 1.0, c = 1.5;
    const double astar = alpha_star(b, c);
    for (const double delta : {-0.1, 0.1}) {
        const HyperbolicTriangle t = place_triangle(b, c, astar + delta);
        const ConditionReport report = check_conditions(t);
        CHECK(!report.passes(1e-3));
        // Conditions (1) and (3)-(5) see the perturbation directly.
        CHECK(report.residuals[1] > 1e-3);
        CHECK(report.residuals[3] > 1e-3);
        CHECK(report.residuals[4] > 1e-3);
        CHECK(report.residuals[5] > 1e-3);
        const double s = measure(t).defect;
        CHECK(s < construct_max_area(b, c).s_star);
    }
}

TEST_CASE("tangency of the optimal construction") {
    // C is the tangency point of the line B'C with omega, so the geodesic
    // realization of B'C stays at Euclidean distance tanh(b/2) from the
    // origin, and the angle ACB' is right.
    for (const auto& [b, c] : {std::pair{1.0, 1.0}, {0.7, 2.2}}) {
        const MaxAreaSolution sol = construct_max_area(b, c);
        const Vec2 cpos = sol.triangle.c_vertex.vec();
        const Vec2 bp = sol.b_inverse.vec();
        const Vec2 dir = (cpos - bp).normalized();
        const double line_dist = std::abs(cross(dir, Vec2{0.0, 0.0} - bp));
        CHECK(line_dist == Approx(std::tanh(0.5 * b)).epsilon(1e-10));

        // Euclidean right angle between the radius AC and the tangent line.
        CHECK(std::abs(dot(cpos.normalized(), dir)) < 1e-9);

        // Euclidean sine theorem invariant of the construction: triangle
        // ACB' has its right angle at C.
        const double ab_e = bp.norm();
        const double ac_e = cpos.norm();
        CHECK(ac_e / ab_e == Approx(std::sin(0.5 * sol.s_star) /
                                    std::sin(kPi / 2.0)).epsilon(1e-10));
    }
}

TEST_CASE("symmetry in the two fixed sides") {
    std::mt19937 rng(24601);
    std::uniform_real_distribution<double> side(0.1, 5.0);
    for (int i = 0; i < 50; ++i) {
        const double b = side(rng), c = side(rng);
        CHECK(alpha_star(b, c) == alpha_star(c, b));
        CHECK(construct_max_area(b, c).s_star ==
              Approx(construct_max_area(c, b).s_star).epsilon(1e-15));
        CHECK(construct_max_area(b, c).a_star ==
              Approx(construct_max_area(c, b).a_star).epsilon(1e-15));
    }
}

TEST_CASE("apex angle surface is monotone and has the right limits") {
    // alpha*(20, 20): frozen 40-digit value; far into the thin regime.
    CHECK(alpha_star(20.0, 20.0) == Approx(1.2841039262533498e-4).epsilon(1e-12));

    std::vector<double> grid;
    for (int i = 0; i <= 40; ++i) grid.push_back(0.05 + i * (5.0 - 0.05) / 40.0);
    const AlphaSurface surf = alpha_star_surface(grid, grid);
    REQUIRE(surf.alpha.size() == grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        REQUIRE(surf.alpha[i].size() == grid.size());
        for (size_t j = 0; j + 1 < grid.size(); ++j) {
            CHECK(surf.alpha[i][j + 1] < surf.alpha[i][j]);  // decreasing in c
            CHECK(surf.alpha[j + 1][i] < surf.alpha[j][i]);  // decreasing in b
        }
    }
    CHECK(surf.alpha[0][0] < kPi / 2.0);
    // b = c -> 0 recovers the Euclidean right angle.
    CHECK(alpha_star(1e-8, 1e-8) == Approx(kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("euclidean limit report") {
    const EuclideanLimitReport fine = euclidean_limit_report(1e-3);
    CHECK(fine.alpha_gap < 1e-6);
    CHECK(fine.area_ratio_gap < 1e-5);
    CHECK(fine.pythagoras_gap < 1e-5);

    const EuclideanLimitReport coarse = euclidean_limit_report(0.1);
    CHECK(coarse.alpha_gap < 1e-2);
    CHECK(coarse.area_ratio_gap < 1e-2);
    CHECK(coarse.pythagoras_gap < 1e-2);

    // Gaps shrink like eps^2: ratio across a decade is ~100.
    CHECK(coarse.alpha_gap / fine.alpha_gap > 1e3);

    CHECK(error_code_of([] { euclidean_limit_report(0.0); }) ==
          ErrorCode::kInvalidArgument);
    CHECK(error_code_of([] { euclidean_limit_report(0.2); }) ==
          ErrorCode::kInvalidArgument);
    CHECK(error_code_of([] { euclidean_limit_report(-1e-3); }) ==
          ErrorCode::kInvalidArgument);
}

TEST_CASE("construction invariants") {
    std::mt19937 rng(314159);
    std::uniform_real_distribution<double> side(0.1, 5.0);
    for (int i = 0; i < 30; ++i) {
        const double b = side(rng), c = side(rng);
        const MaxAreaSolution sol = construct_max_area(b, c);

        CHECK(sol.triangle.a_vertex.vec().norm() == 0.0);
        CHECK(std::abs(sol.triangle.b_vertex.y()) < 1e-15);
        CHECK(sol.triangle.b_vertex.x() == Approx(std::tanh(0.5 * c)).epsilon(1e-14));
        CHECK(sol.triangle.c_vertex.vec().norm() ==
              Approx(std::tanh(0.5 * b)).epsilon(1e-12));
        CHECK(sol.omega.radius == b);
        CHECK(sol.b_inverse.vec().norm() * std::tanh(0.5 * c) ==
              Approx(1.0).epsilon(1e-13));

        const TriangleMetrics m = measure(sol.triangle);
        CHECK(std::abs(m.angle_alpha - sol.alpha_star) < 1e-9);
        CHECK(std::abs(m.defect - sol.s_star) < 1e-9);
        CHECK(std::abs(m.side_a - sol.a_star) < 1e-9);

        // Conditions survive a disc automorphism (congruence).
        const DiscAutomorphism g =
            mobius_to_origin(DiscPoint(0.3, -0.4));
        const HyperbolicTriangle moved{g.apply(sol.triangle.a_vertex),
                                       g.apply(sol.triangle.b_vertex),
                                       g.apply(sol.triangle.c_vertex)};
        CHECK(check_conditions(moved).passes(1e-8));
    }
}

TEST_CASE("constructibility domain") {
    CHECK(max_constructible_side() == Approx(2.0 * std::atanh(1.0 - 1e-9)));
    CHECK_NOTHROW(construct_max_area(21.0, 1.0));
    CHECK(error_code_of([] { construct_max_area(22.0, 1.0); }) ==
          ErrorCode::kDomain);
    CHECK(error_code_of([] { construct_max_area(1.0, 22.0); }) ==
          ErrorCode::kDomain);
    CHECK(error_code_of([] { construct_max_area(0.0, 1.0); }) ==
          ErrorCode::kInvalidArgument);
    CHECK(error_code_of([] { construct_max_area(-1.0, 1.0); }) ==
          ErrorCode::kInvalidArgument);
    CHECK(error_code_of([] { alpha_star(1.0, 0.0); }) ==
          ErrorCode::kInvalidArgument);
}
