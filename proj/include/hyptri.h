/* C interface to the hyperbolic triangle kernel (Poincare disc model).
 *
 * All functions return ht_status; outputs go through pointers. On failure the
 * outputs are untouched and ht_last_error() describes the problem for the
 * calling thread. Handles (ht_solution, ht_chord) are opaque and must be
 * released with the matching destroy function.
 */
#ifndef HYPTRI_H
#define HYPTRI_H

#include <stddef.h>

#if defined(_WIN32)
#define HYPTRI_API __declspec(dllexport)
#else
#define HYPTRI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ht_status {
    HT_OK = 0,
    HT_ERR_INVALID_ARGUMENT = 1,
    HT_ERR_DEGENERATE_INPUT = 2,
    HT_ERR_POINT_OUTSIDE_DISC = 3,
    HT_ERR_POINT_NOT_ON_GEODESIC = 4,
    HT_ERR_POINT_NOT_ON_CHORD = 5,
    HT_ERR_CHORD_MISSES_DISC = 6,
    HT_ERR_COLLINEAR_POINTS = 7,
    HT_ERR_NO_COMPACT_CIRCUMCIRCLE = 8,
    HT_ERR_DEGENERATE_TRIANGLE = 9,
    HT_ERR_DOMAIN = 10,
    HT_ERR_INTERNAL = 11
} ht_status;

/* Stable name for a status code ("HT_OK", ...). Never NULL. */
HYPTRI_API const char* ht_status_name(ht_status status);

/* Message from the most recent failing call on this thread ("" if none). */
HYPTRI_API const char* ht_last_error(void);

/* Library version as "major.minor.patch". */
HYPTRI_API const char* ht_version(void);

/* ---- Disc primitives ---------------------------------------------------- */

/* Hyperbolic distance between interior points (px,py) and (qx,qy). */
HYPTRI_API ht_status ht_distance(double px, double py, double qx, double qy,
                                 double* dist);

/* Inversion in the absolute: v -> v / |v|^2. Rejects v = 0 and |v| = 1. */
HYPTRI_API ht_status ht_invert_in_absolute(double x, double y, double* out_x,
                                           double* out_y);

/* Hyperbolic midpoint of the segment pq. */
HYPTRI_API ht_status ht_hyperbolic_midpoint(double px, double py, double qx, double qy,
                                            double* out_x, double* out_y);

/* Point on ray p->q at hyperbolic distance `dist` from p. */
HYPTRI_API ht_status ht_point_along(double px, double py, double qx, double qy,
                                    double dist, double* out_x, double* out_y);

/* Hyperbolic circumcenter and circumradius of a triangle. Fails with
 * HT_ERR_NO_COMPACT_CIRCUMCIRCLE when the circumscribed curve is not a
 * compact circle, and HT_ERR_COLLINEAR_POINTS when the vertices share a
 * geodesic. */
HYPTRI_API ht_status ht_circumcenter(double ax, double ay, double bx, double by,
                                     double cx, double cy, double* out_x, double* out_y,
                                     double* out_radius);

/* Euclidean realization of the hyperbolic circle with the given center and
 * radius: in the disc model it is again a circle, generally off-center. */
HYPTRI_API ht_status ht_circle_realization(double cx, double cy, double radius,
                                           double* euclid_x, double* euclid_y,
                                           double* euclid_radius);

/* ---- Triangles ----------------------------------------------------------- */

typedef struct ht_triangle_metrics {
    double side_a, side_b, side_c;          /* opposite vertices A, B, C */
    double angle_alpha, angle_beta, angle_gamma;
    double defect;                           /* area = pi - alpha - beta - gamma */
} ht_triangle_metrics;

HYPTRI_API ht_status ht_triangle_measure(double ax, double ay, double bx, double by,
                                         double cx, double cy,
                                         ht_triangle_metrics* metrics);

/* Side a from sides b, c and the included angle alpha (cosine theorem). */
HYPTRI_API ht_status ht_side_from_cosine_theorem(double b, double c, double alpha,
                                                 double* side_a);

/* Area of the triangle with sides b, c and included angle alpha. */
HYPTRI_API ht_status ht_area_from_sides_and_angle(double b, double c, double alpha,
                                                  double* area);

/* ---- Equal-area chords --------------------------------------------------- */

typedef struct ht_chord_s ht_chord;

/* Chord of the absolute through the inverse point of B = (bx,by), inclined at
 * `tau` to the ray OB. Every inscribed triangle OBC with C on the chord has
 * area 2*tau. */
HYPTRI_API ht_status ht_chord_create(double bx, double by, double tau, ht_chord** chord);
HYPTRI_API void ht_chord_destroy(ht_chord* chord);

HYPTRI_API ht_status ht_chord_tau(const ht_chord* chord, double* tau);
HYPTRI_API ht_status ht_chord_endpoints(const ht_chord* chord, double* near_x,
                                        double* near_y, double* far_x, double* far_y);
HYPTRI_API ht_status ht_chord_inverse_point(const ht_chord* chord, double* x, double* y);

/* Interior point of the chord at parameter u in [0,1] (0 near, 1 far). */
HYPTRI_API ht_status ht_chord_sample(const ht_chord* chord, double u, double* x,
                                     double* y);

/* Area of triangle O, B, C for a point C on the chord (equals 2*tau). */
HYPTRI_API ht_status ht_chord_area_at(const ht_chord* chord, double cx, double cy,
                                      double* area);

/* Largest tau for which the chord through the inverse point of B meets the
 * disc: arcsin(|B|). */
HYPTRI_API ht_status ht_max_chord_angle(double bx, double by, double* tau_max);

/* ---- Maximum-area triangle with two fixed sides -------------------------- */

typedef struct ht_solution_s ht_solution;

/* Optimal triangle with |AB| = c, |AC| = b, A at the origin and B on the
 * positive x-axis. */
HYPTRI_API ht_status ht_solve(double b, double c, ht_solution** solution);
HYPTRI_API void ht_solution_destroy(ht_solution* solution);

HYPTRI_API ht_status ht_solution_alpha(const ht_solution* solution, double* alpha);
HYPTRI_API ht_status ht_solution_area(const ht_solution* solution, double* area);
HYPTRI_API ht_status ht_solution_side(const ht_solution* solution, double* side_a);
HYPTRI_API ht_status ht_solution_vertices(const ht_solution* solution, double* ax,
                                          double* ay, double* bx, double* by, double* cx,
                                          double* cy);
HYPTRI_API ht_status ht_solution_inverse_point(const ht_solution* solution, double* x,
                                               double* y);
HYPTRI_API ht_status ht_solution_omega(const ht_solution* solution, double* cx,
                                       double* cy, double* radius);

/* Residuals of the six equivalent optimality conditions, evaluated on a
 * triangle: [0] gap to the brute-force area maximum for the measured sides,
 * [1] angle balance |alpha - (beta + gamma)|, [2] circumcenter-to-
 * midpoint(BC) distance, [3] |sin(S/2) - tanh(b/2) tanh(c/2)|,
 * [4] |cos(alpha) - tanh(b/2) tanh(c/2)|, [5] |sinh^2(a/2) - sinh^2(b/2) -
 * sinh^2(c/2)|. */
typedef struct ht_condition_report {
    double residual[6];
    int alpha_acute;            /* nonzero when alpha < pi/2 */
    int circumcircle_compact;   /* nonzero when the circumcircle is a circle */
} ht_condition_report;

HYPTRI_API ht_status ht_solution_check(const ht_solution* solution,
                                       ht_condition_report* report);
HYPTRI_API ht_status ht_check_triangle(double ax, double ay, double bx, double by,
                                       double cx, double cy,
                                       ht_condition_report* report);

/* Derivative-free maximization of the area over the apex angle, for use as an
 * independent cross-check of the closed form. */
HYPTRI_API ht_status ht_brute_force_optimum(double b, double c, double* alpha_hat,
                                            double* area_hat);

/* Small-scale behaviour with both fixed sides equal to epsilon: optimal
 * alpha against pi/2, area against the Euclidean (1/2) eps^2 sin(alpha),
 * and the squared third side against the Pythagorean 2 eps^2. */
HYPTRI_API ht_status ht_euclidean_limit(double epsilon, double* alpha_gap,
                                        double* area_ratio_gap,
                                        double* pythagoras_gap);

/* ---- Isoperimetry -------------------------------------------------------- */

/* Regular n-gon with perimeter L: circumradius and area. */
HYPTRI_API ht_status ht_regular_polygon(int n, double perimeter, double* circumradius,
                                        double* area);

/* Area of the circle with the given perimeter. */
HYPTRI_API ht_status ht_circle_area_for_perimeter(double perimeter, double* area);

/* One local symmetrization step: the triangle with sides b, c and included
 * angle alpha is replaced by the area-optimal one with the same sides; the
 * area never decreases. */
HYPTRI_API ht_status ht_reflection_step(double b, double c, double alpha,
                                        double* original_area,
                                        double* optimized_area);

/* ---- Rendering ----------------------------------------------------------- */

/* Construction figure for a solution as an SVG document. The string is
 * malloc'd; release it with ht_string_free. */
HYPTRI_API ht_status ht_render_construction_svg(const ht_solution* solution,
                                                char** svg);
HYPTRI_API void ht_string_free(char* str);

#ifdef __cplusplus
}
#endif

#endif /* HYPTRI_H */
