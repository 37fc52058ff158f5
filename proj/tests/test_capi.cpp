#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>

#include "hyptri.h"

using doctest::Approx;

TEST_CASE("library metadata") {
    CHECK(std::strcmp(ht_status_name(HT_OK), "HT_OK") == 0);
    CHECK(std::strcmp(ht_status_name(HT_ERR_DOMAIN), "HT_ERR_DOMAIN") == 0);
    CHECK(std::strcmp(ht_status_name(static_cast<ht_status>(999)),
                      "HT_ERR_UNKNOWN") == 0);
    const std::string version = ht_version();
    CHECK(version.find('.') != std::string::npos);
}

TEST_CASE("distance and inversion anchors") {
    double d = 0.0;
    REQUIRE(ht_distance(0.0, 0.0, std::tanh(0.5), 0.0, &d) == HT_OK);
    CHECK(d == Approx(1.0).epsilon(1e-14));
    REQUIRE(ht_distance(0.3, 0.0, 0.6, 0.0, &d) == HT_OK);
    CHECK(d == Approx(0.7672551527136672).epsilon(1e-15));

    double ix = 0.0, iy = 0.0;
    REQUIRE(ht_invert_in_absolute(0.3, 0.4, &ix, &iy) == HT_OK);
    CHECK(ix == Approx(1.2).epsilon(1e-14));
    CHECK(iy == Approx(1.6).epsilon(1e-14));
    // Inversion works both ways across the absolute.
    REQUIRE(ht_invert_in_absolute(ix, iy, &ix, &iy) == HT_OK);
    CHECK(ix == Approx(0.3).epsilon(1e-13));
    CHECK(iy == Approx(0.4).epsilon(1e-13));
}

TEST_CASE("error mapping and last-error message") {
    double d = 0.0;
    CHECK(ht_distance(1.5, 0.0, 0.0, 0.0, &d) == HT_ERR_POINT_OUTSIDE_DISC);
    CHECK(std::strlen(ht_last_error()) > 0);

    double x = 0.0, y = 0.0;
    CHECK(ht_invert_in_absolute(0.0, 0.0, &x, &y) == HT_ERR_DEGENERATE_INPUT);

    ht_chord* chord = nullptr;
    CHECK(ht_chord_create(0.5, 0.0, 1.0, &chord) == HT_ERR_CHORD_MISSES_DISC);
    CHECK(chord == nullptr);

    double r = 0.0;
    CHECK(ht_circumcenter(-0.2, 0.0, 0.1, 0.0, 0.4, 0.0, &x, &y, &r) ==
          HT_ERR_COLLINEAR_POINTS);
    CHECK(ht_circumcenter(1.0, 0.0, 0.5, 0.5, 0.5 + 0.5 * std::cos(3.0),
                          0.5 * std::sin(3.0), &x, &y, &r) ==
          HT_ERR_POINT_OUTSIDE_DISC);
    // Horocyclic triple: all three on a circle tangent to the absolute.
    CHECK(ht_circumcenter(0.5 + 0.5 * std::cos(2.0), 0.5 * std::sin(2.0),
                          0.5 + 0.5 * std::cos(3.0), 0.5 * std::sin(3.0),
                          0.5 + 0.5 * std::cos(4.0), 0.5 * std::sin(4.0),
                          &x, &y, &r) == HT_ERR_NO_COMPACT_CIRCUMCIRCLE);

    ht_solution* sol = nullptr;
    CHECK(ht_solve(22.0, 1.0, &sol) == HT_ERR_DOMAIN);
    CHECK(sol == nullptr);
    CHECK(ht_solve(0.0, 1.0, &sol) == HT_ERR_INVALID_ARGUMENT);

    ht_triangle_metrics m{};
    CHECK(ht_triangle_measure(0.1, 0.1, 0.1, 0.1, 0.3, 0.0, &m) ==
          HT_ERR_DEGENERATE_TRIANGLE);
}

TEST_CASE("null outputs are rejected") {
    CHECK(ht_distance(0.0, 0.0, 0.1, 0.0, nullptr) == HT_ERR_INVALID_ARGUMENT);
    CHECK(ht_solve(1.0, 1.0, nullptr) == HT_ERR_INVALID_ARGUMENT);
    CHECK(ht_chord_create(0.5, 0.0, 0.2, nullptr) == HT_ERR_INVALID_ARGUMENT);
    CHECK(ht_chord_tau(nullptr, nullptr) == HT_ERR_INVALID_ARGUMENT);
    double v = 0.0;
    CHECK(ht_chord_tau(nullptr, &v) == HT_ERR_INVALID_ARGUMENT);
    CHECK(ht_render_construction_svg(nullptr, nullptr) == HT_ERR_INVALID_ARGUMENT);
    ht_chord_destroy(nullptr);        // no-ops, must not crash
    ht_solution_destroy(nullptr);
    ht_string_free(nullptr);
}

TEST_CASE("solution lifecycle and checks") {
    ht_solution* sol = nullptr;
    REQUIRE(ht_solve(1.0, 2.0, &sol) == HT_OK);
    REQUIRE(sol != nullptr);

    double alpha = 0.0, area = 0.0, side = 0.0;
    CHECK(ht_solution_alpha(sol, &alpha) == HT_OK);
    CHECK(ht_solution_area(sol, &area) == HT_OK);
    CHECK(ht_solution_side(sol, &side) == HT_OK);
    CHECK(alpha == Approx(1.2111473112614116).epsilon(1e-14));
    CHECK(area == Approx(0.7192980310669700).epsilon(1e-14));
    CHECK(side == Approx(2.1392194447570509).epsilon(1e-14));

    double ax, ay, bx, by, cx, cy;
    REQUIRE(ht_solution_vertices(sol, &ax, &ay, &bx, &by, &cx, &cy) == HT_OK);
    CHECK(ax == 0.0);
    CHECK(ay == 0.0);
    CHECK(bx == Approx(std::tanh(1.0)).epsilon(1e-14));
    CHECK(by == 0.0);
    CHECK(std::hypot(cx, cy) == Approx(std::tanh(0.5)).epsilon(1e-12));

    double ivx = 0.0, ivy = 0.0;
    REQUIRE(ht_solution_inverse_point(sol, &ivx, &ivy) == HT_OK);
    CHECK(ivx == Approx(1.0 / std::tanh(1.0)).epsilon(1e-13));
    CHECK(ivy == 0.0);

    double ocx = 1.0, ocy = 1.0, oradius = 0.0;
    REQUIRE(ht_solution_omega(sol, &ocx, &ocy, &oradius) == HT_OK);
    CHECK(ocx == 0.0);
    CHECK(ocy == 0.0);
    CHECK(oradius == 1.0);  // hyperbolic radius b

    ht_condition_report report{};
    REQUIRE(ht_solution_check(sol, &report) == HT_OK);
    CHECK(report.alpha_acute != 0);
    CHECK(report.circumcircle_compact != 0);
    for (const double r : report.residual) CHECK(r < 1e-9);

    // Same residuals when the triangle is passed by coordinates.
    ht_condition_report loose{};
    REQUIRE(ht_check_triangle(ax, ay, bx, by, cx, cy, &loose) == HT_OK);
    for (int i = 0; i < 6; ++i)
        CHECK(std::abs(loose.residual[i] - report.residual[i]) < 1e-12);

    ht_solution_destroy(sol);
}

TEST_CASE("non-optimal triangles fail the conditions") {
    // Apex angle pi/2 instead of alpha*: clearly sub-optimal in curvature.
    const double tb = std::tanh(0.5);
    ht_condition_report report{};
    REQUIRE(ht_check_triangle(0.0, 0.0, tb, 0.0, 0.0, tb, &report) == HT_OK);
    CHECK(report.residual[1] > 1e-3);
    CHECK(report.residual[4] > 1e-3);
}

TEST_CASE("chord lifecycle") {
    ht_chord* chord = nullptr;
    REQUIRE(ht_chord_create(0.5, 0.0, 0.2, &chord) == HT_OK);
    REQUIRE(chord != nullptr);

    double tau = 0.0;
    CHECK(ht_chord_tau(chord, &tau) == HT_OK);
    CHECK(tau == 0.2);

    double ix = 0.0, iy = 0.0;
    CHECK(ht_chord_inverse_point(chord, &ix, &iy) == HT_OK);
    CHECK(ix == Approx(2.0).epsilon(1e-14));

    double nx, ny, fx, fy;
    REQUIRE(ht_chord_endpoints(chord, &nx, &ny, &fx, &fy) == HT_OK);
    CHECK(std::hypot(nx, ny) == Approx(1.0).epsilon(1e-12));
    CHECK(std::hypot(fx, fy) == Approx(1.0).epsilon(1e-12));

    for (int i = 0; i <= 10; ++i) {
        double x = 0.0, y = 0.0;
        REQUIRE(ht_chord_sample(chord, i / 10.0, &x, &y) == HT_OK);
        double area = 0.0;
        REQUIRE(ht_chord_area_at(chord, x, y, &area) == HT_OK);
        CHECK(area == Approx(0.4).epsilon(1e-9));
    }

    double off_area = 0.0;
    CHECK(ht_chord_area_at(chord, 0.0, 0.5, &off_area) == HT_ERR_POINT_NOT_ON_CHORD);
    CHECK(ht_chord_sample(chord, 1.5, &ix, &iy) == HT_ERR_INVALID_ARGUMENT);

    double tau_max = 0.0;
    REQUIRE(ht_max_chord_angle(0.5, 0.0, &tau_max) == HT_OK);
    CHECK(tau_max == Approx(std::asin(0.5)).epsilon(1e-15));

    ht_chord_destroy(chord);
}

TEST_CASE("auxiliary computations") {
    double alpha_hat = 0.0, area_hat = 0.0;
    REQUIRE(ht_brute_force_optimum(1.0, 1.0, &alpha_hat, &area_hat) == HT_OK);
    CHECK(alpha_hat == Approx(1.3555866559926345).epsilon(1e-7));
    CHECK(area_hat == Approx(0.4304193416045242).epsilon(1e-10));

    double alpha_gap = 1.0, ratio_gap = 1.0, pyth_gap = 1.0;
    REQUIRE(ht_euclidean_limit(1e-3, &alpha_gap, &ratio_gap, &pyth_gap) == HT_OK);
    CHECK(alpha_gap < 1e-6);
    CHECK(ratio_gap < 1e-5);
    CHECK(pyth_gap < 1e-5);
    CHECK(ht_euclidean_limit(0.5, &alpha_gap, &ratio_gap, &pyth_gap) ==
          HT_ERR_INVALID_ARGUMENT);

    double radius = 0.0, area = 0.0;
    REQUIRE(ht_regular_polygon(64, 10.0, &radius, &area) == HT_OK);
    double circle = 0.0;
    REQUIRE(ht_circle_area_for_perimeter(10.0, &circle) == HT_OK);
    CHECK(area < circle);
    CHECK(circle - area < 0.01 * circle);
    CHECK(ht_regular_polygon(2, 1.0, &radius, &area) == HT_ERR_INVALID_ARGUMENT);

    double before = 0.0, after = 0.0;
    REQUIRE(ht_reflection_step(1.0, 1.5, 0.8, &before, &after) == HT_OK);
    CHECK(after > before);
}

TEST_CASE("svg rendering through the C interface") {
    ht_solution* sol = nullptr;
    REQUIRE(ht_solve(1.0, 1.0, &sol) == HT_OK);
    char* svg = nullptr;
    REQUIRE(ht_render_construction_svg(sol, &svg) == HT_OK);
    REQUIRE(svg != nullptr);
    CHECK(std::strncmp(svg, "<svg ", 5) == 0);
    CHECK(std::strstr(svg, "</svg>") != nullptr);
    ht_string_free(svg);
    ht_solution_destroy(sol);
}
