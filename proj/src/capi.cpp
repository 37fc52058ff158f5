#include "hyptri.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "chord.hpp"
#include "disc.hpp"
#include "error.hpp"
#include "isoperimetric.hpp"
#include "max_area.hpp"
#include "svg_render.hpp"
#include "triangle.hpp"

using namespace hyptri;

struct ht_chord_s {
    EqualAreaChord chord;
};

struct ht_solution_s {
    MaxAreaSolution solution;
};

namespace {

thread_local std::string t_last_error;

ht_status map_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::kInvalidArgument: return HT_ERR_INVALID_ARGUMENT;
        case ErrorCode::kDegenerateInput: return HT_ERR_DEGENERATE_INPUT;
        case ErrorCode::kPointOutsideDisc: return HT_ERR_POINT_OUTSIDE_DISC;
        case ErrorCode::kPointNotOnGeodesic: return HT_ERR_POINT_NOT_ON_GEODESIC;
        case ErrorCode::kPointNotOnChord: return HT_ERR_POINT_NOT_ON_CHORD;
        case ErrorCode::kChordMissesDisc: return HT_ERR_CHORD_MISSES_DISC;
        case ErrorCode::kCollinearPoints: return HT_ERR_COLLINEAR_POINTS;
        case ErrorCode::kNoCompactCircumcircle: return HT_ERR_NO_COMPACT_CIRCUMCIRCLE;
        case ErrorCode::kDegenerateTriangle: return HT_ERR_DEGENERATE_TRIANGLE;
        case ErrorCode::kDomain: return HT_ERR_DOMAIN;
    }
    return HT_ERR_INTERNAL;
}

// Runs the body, routing kernel exceptions into status codes and the
// thread-local message slot.
template <typename Fn>
ht_status guarded(Fn&& fn) {
    try {
        fn();
        t_last_error.clear();
        return HT_OK;
    } catch (const Error& e) {
        t_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return HT_ERR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown error";
        return HT_ERR_INTERNAL;
    }
}

ht_status require(bool ok, const char* message) {
    if (ok) return HT_OK;
    t_last_error = message;
    return HT_ERR_INVALID_ARGUMENT;
}

void fill_report(const ConditionReport& src, ht_condition_report* dst) {
    for (int i = 0; i < 6; ++i) dst->residual[i] = src.residuals[static_cast<size_t>(i)];
    dst->alpha_acute = src.alpha_acute ? 1 : 0;
    dst->circumcircle_compact = src.circumcircle_compact ? 1 : 0;
}

}  // namespace

extern "C" {

const char* ht_status_name(ht_status status) {
    switch (status) {
        case HT_OK: return "HT_OK";
        case HT_ERR_INVALID_ARGUMENT: return "HT_ERR_INVALID_ARGUMENT";
        case HT_ERR_DEGENERATE_INPUT: return "HT_ERR_DEGENERATE_INPUT";
        case HT_ERR_POINT_OUTSIDE_DISC: return "HT_ERR_POINT_OUTSIDE_DISC";
        case HT_ERR_POINT_NOT_ON_GEODESIC: return "HT_ERR_POINT_NOT_ON_GEODESIC";
        case HT_ERR_POINT_NOT_ON_CHORD: return "HT_ERR_POINT_NOT_ON_CHORD";
        case HT_ERR_CHORD_MISSES_DISC: return "HT_ERR_CHORD_MISSES_DISC";
        case HT_ERR_COLLINEAR_POINTS: return "HT_ERR_COLLINEAR_POINTS";
        case HT_ERR_NO_COMPACT_CIRCUMCIRCLE: return "HT_ERR_NO_COMPACT_CIRCUMCIRCLE";
        case HT_ERR_DEGENERATE_TRIANGLE: return "HT_ERR_DEGENERATE_TRIANGLE";
        case HT_ERR_DOMAIN: return "HT_ERR_DOMAIN";
        case HT_ERR_INTERNAL: return "HT_ERR_INTERNAL";
    }
    return "HT_ERR_UNKNOWN";
}

const char* ht_last_error(void) { return t_last_error.c_str(); }

const char* ht_version(void) { return "1.0.0"; }

ht_status ht_distance(double px, double py, double qx, double qy, double* dist) {
    if (ht_status s = require(dist != nullptr, "dist is NULL")) return s;
    return guarded([&] { *dist = distance(DiscPoint(px, py), DiscPoint(qx, qy)); });
}

ht_status ht_invert_in_absolute(double x, double y, double* out_x, double* out_y) {
    if (ht_status s = require(out_x && out_y, "output is NULL")) return s;
    return guarded([&] {
        // Involution: accept either side of the absolute.
        if (std::hypot(x, y) < 1.0) {
            const InversePoint img = invert_in_absolute(DiscPoint(x, y));
            *out_x = img.x();
            *out_y = img.y();
        } else {
            const DiscPoint img = invert_in_absolute(InversePoint(x, y));
            *out_x = img.x();
            *out_y = img.y();
        }
    });
}

ht_status ht_hyperbolic_midpoint(double px, double py, double qx, double qy,
                                 double* out_x, double* out_y) {
    if (ht_status s = require(out_x && out_y, "output is NULL")) return s;
    return guarded([&] {
        const DiscPoint m = hyperbolic_midpoint(DiscPoint(px, py), DiscPoint(qx, qy));
        *out_x = m.x();
        *out_y = m.y();
    });
}

ht_status ht_point_along(double px, double py, double qx, double qy, double dist,
                         double* out_x, double* out_y) {
    if (ht_status s = require(out_x && out_y, "output is NULL")) return s;
    return guarded([&] {
        const DiscPoint m = point_along(DiscPoint(px, py), DiscPoint(qx, qy), dist);
        *out_x = m.x();
        *out_y = m.y();
    });
}

ht_status ht_circumcenter(double ax, double ay, double bx, double by, double cx,
                          double cy, double* out_x, double* out_y, double* out_radius) {
    if (ht_status s = require(out_x && out_y && out_radius, "output is NULL")) return s;
    return guarded([&] {
        const DiscPoint a(ax, ay), b(bx, by), c(cx, cy);
        const auto center = circumcenter(a, b, c);
        if (!center)
            fail(ErrorCode::kNoCompactCircumcircle,
                 "circumscribed curve is not a compact circle");
        *out_x = center->x();
        *out_y = center->y();
        *out_radius = distance(*center, a);
    });
}

ht_status ht_circle_realization(double cx, double cy, double radius, double* euclid_x,
                                double* euclid_y, double* euclid_radius) {
    if (ht_status s = require(euclid_x && euclid_y && euclid_radius, "output is NULL"))
        return s;
    return guarded([&] {
        const CircleRealization r =
            circle_realization(HyperbolicCircle(DiscPoint(cx, cy), radius));
        *euclid_x = r.center.x;
        *euclid_y = r.center.y;
        *euclid_radius = r.radius;
    });
}

ht_status ht_triangle_measure(double ax, double ay, double bx, double by, double cx,
                              double cy, ht_triangle_metrics* metrics) {
    if (ht_status s = require(metrics != nullptr, "metrics is NULL")) return s;
    return guarded([&] {
        const TriangleMetrics m =
            measure({DiscPoint(ax, ay), DiscPoint(bx, by), DiscPoint(cx, cy)});
        metrics->side_a = m.side_a;
        metrics->side_b = m.side_b;
        metrics->side_c = m.side_c;
        metrics->angle_alpha = m.angle_alpha;
        metrics->angle_beta = m.angle_beta;
        metrics->angle_gamma = m.angle_gamma;
        metrics->defect = m.defect;
    });
}

ht_status ht_side_from_cosine_theorem(double b, double c, double alpha, double* side_a) {
    if (ht_status s = require(side_a != nullptr, "side_a is NULL")) return s;
    return guarded([&] { *side_a = side_from_cosine_theorem(b, c, alpha); });
}

ht_status ht_area_from_sides_and_angle(double b, double c, double alpha, double* area) {
    if (ht_status s = require(area != nullptr, "area is NULL")) return s;
    return guarded([&] { *area = area_from_sides_and_angle(b, c, alpha); });
}

ht_status ht_chord_create(double bx, double by, double tau, ht_chord** chord) {
    if (ht_status s = require(chord != nullptr, "chord is NULL")) return s;
    return guarded([&] {
        *chord = new ht_chord_s{chord_for_angle(DiscPoint(bx, by), tau)};
    });
}

void ht_chord_destroy(ht_chord* chord) { delete chord; }

ht_status ht_chord_tau(const ht_chord* chord, double* tau) {
    if (ht_status s = require(chord && tau, "argument is NULL")) return s;
    *tau = chord->chord.tau;
    return HT_OK;
}

ht_status ht_chord_endpoints(const ht_chord* chord, double* near_x, double* near_y,
                             double* far_x, double* far_y) {
    if (ht_status s = require(chord && near_x && near_y && far_x && far_y,
                              "argument is NULL"))
        return s;
    *near_x = chord->chord.end_near.x;
    *near_y = chord->chord.end_near.y;
    *far_x = chord->chord.end_far.x;
    *far_y = chord->chord.end_far.y;
    return HT_OK;
}

ht_status ht_chord_inverse_point(const ht_chord* chord, double* x, double* y) {
    if (ht_status s = require(chord && x && y, "argument is NULL")) return s;
    *x = chord->chord.b_inverse.x();
    *y = chord->chord.b_inverse.y();
    return HT_OK;
}

ht_status ht_chord_sample(const ht_chord* chord, double u, double* x, double* y) {
    if (ht_status s = require(chord && x && y, "argument is NULL")) return s;
    return guarded([&] {
        const DiscPoint p = chord->chord.sample(u);
        *x = p.x();
        *y = p.y();
    });
}

ht_status ht_chord_area_at(const ht_chord* chord, double cx, double cy, double* area) {
    if (ht_status s = require(chord && area, "argument is NULL")) return s;
    return guarded([&] { *area = area_on_chord(chord->chord, DiscPoint(cx, cy)); });
}

ht_status ht_max_chord_angle(double bx, double by, double* tau_max) {
    if (ht_status s = require(tau_max != nullptr, "tau_max is NULL")) return s;
    return guarded([&] { *tau_max = max_angle_for_point(DiscPoint(bx, by)); });
}

ht_status ht_solve(double b, double c, ht_solution** solution) {
    if (ht_status s = require(solution != nullptr, "solution is NULL")) return s;
    return guarded([&] { *solution = new ht_solution_s{construct_max_area(b, c)}; });
}

void ht_solution_destroy(ht_solution* solution) { delete solution; }

ht_status ht_solution_alpha(const ht_solution* solution, double* alpha) {
    if (ht_status s = require(solution && alpha, "argument is NULL")) return s;
    *alpha = solution->solution.alpha_star;
    return HT_OK;
}

ht_status ht_solution_area(const ht_solution* solution, double* area) {
    if (ht_status s = require(solution && area, "argument is NULL")) return s;
    *area = solution->solution.s_star;
    return HT_OK;
}

ht_status ht_solution_side(const ht_solution* solution, double* side_a) {
    if (ht_status s = require(solution && side_a, "argument is NULL")) return s;
    *side_a = solution->solution.a_star;
    return HT_OK;
}

ht_status ht_solution_vertices(const ht_solution* solution, double* ax, double* ay,
                               double* bx, double* by, double* cx, double* cy) {
    if (ht_status s = require(solution && ax && ay && bx && by && cx && cy,
                              "argument is NULL"))
        return s;
    const HyperbolicTriangle& t = solution->solution.triangle;
    *ax = t.a_vertex.x();
    *ay = t.a_vertex.y();
    *bx = t.b_vertex.x();
    *by = t.b_vertex.y();
    *cx = t.c_vertex.x();
    *cy = t.c_vertex.y();
    return HT_OK;
}

ht_status ht_solution_inverse_point(const ht_solution* solution, double* x, double* y) {
    if (ht_status s = require(solution && x && y, "argument is NULL")) return s;
    *x = solution->solution.b_inverse.x();
    *y = solution->solution.b_inverse.y();
    return HT_OK;
}

ht_status ht_solution_omega(const ht_solution* solution, double* cx, double* cy,
                            double* radius) {
    if (ht_status s = require(solution && cx && cy && radius, "argument is NULL"))
        return s;
    *cx = solution->solution.omega.center.x();
    *cy = solution->solution.omega.center.y();
    *radius = solution->solution.omega.radius;
    return HT_OK;
}

ht_status ht_solution_check(const ht_solution* solution, ht_condition_report* report) {
    if (ht_status s = require(solution && report, "argument is NULL")) return s;
    return guarded([&] { fill_report(check_conditions(solution->solution), report); });
}

ht_status ht_check_triangle(double ax, double ay, double bx, double by, double cx,
                            double cy, ht_condition_report* report) {
    if (ht_status s = require(report != nullptr, "report is NULL")) return s;
    return guarded([&] {
        const HyperbolicTriangle t{DiscPoint(ax, ay), DiscPoint(bx, by),
                                   DiscPoint(cx, cy)};
        fill_report(check_conditions(t), report);
    });
}

ht_status ht_brute_force_optimum(double b, double c, double* alpha_hat,
                                 double* area_hat) {
    if (ht_status s = require(alpha_hat && area_hat, "output is NULL")) return s;
    return guarded([&] {
        const BruteForceResult r = brute_force_optimum(b, c);
        *alpha_hat = r.alpha_hat;
        *area_hat = r.s_hat;
    });
}

ht_status ht_euclidean_limit(double epsilon, double* alpha_gap, double* area_ratio_gap,
                             double* pythagoras_gap) {
    if (ht_status s = require(alpha_gap && area_ratio_gap && pythagoras_gap,
                              "output is NULL"))
        return s;
    return guarded([&] {
        const EuclideanLimitReport r = euclidean_limit_report(epsilon);
        *alpha_gap = r.alpha_gap;
        *area_ratio_gap = r.area_ratio_gap;
        *pythagoras_gap = r.pythagoras_gap;
    });
}

ht_status ht_regular_polygon(int n, double perimeter, double* circumradius,
                             double* area) {
    if (ht_status s = require(circumradius && area, "output is NULL")) return s;
    return guarded([&] {
        const RegularPolygonSpec spec = regular_polygon(n, perimeter);
        *circumradius = spec.circumradius;
        *area = spec.area;
    });
}

ht_status ht_circle_area_for_perimeter(double perimeter, double* area) {
    if (ht_status s = require(area != nullptr, "area is NULL")) return s;
    return guarded([&] { *area = circle_area_for_perimeter(perimeter); });
}

ht_status ht_reflection_step(double b, double c, double alpha, double* original_area,
                             double* optimized_area) {
    if (ht_status s = require(original_area && optimized_area, "output is NULL"))
        return s;
    return guarded([&] {
        const ReflectionStep step = reflection_step_check(b, c, alpha);
        *original_area = step.original_area;
        *optimized_area = step.optimized_area;
    });
}

ht_status ht_render_construction_svg(const ht_solution* solution, char** svg) {
    if (ht_status s = require(solution && svg, "argument is NULL")) return s;
    return guarded([&] {
        const std::string text = render_construction_svg(solution->solution);
        char* buf = static_cast<char*>(std::malloc(text.size() + 1));
        if (buf == nullptr) throw std::bad_alloc();
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *svg = buf;
    });
}

void ht_string_free(char* str) { std::free(str); }

}  // extern "C"
