// Independent re-derivations used as test oracles. Each takes a different
// algebraic route than the code under test.
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "vec2.hpp"

namespace hyptri::test {

// Distance in the arcosh form (the kernel uses the artanh form).
inline double oracle_distance(Vec2 p, Vec2 q) {
    const double d2 = (p - q).squared_norm();
    return std::acosh(1.0 +
                      2.0 * d2 / ((1.0 - p.squared_norm()) * (1.0 - q.squared_norm())));
}

namespace detail {

template <typename F>
double simpson(F& f, double lo, double hi, double flo, double fmid, double fhi) {
    (void)f;
    return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
}

template <typename F>
double adapt(F& f, double lo, double hi, double flo, double fmid, double fhi,
             double whole, double tol, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double lmid = 0.5 * (lo + mid), rmid = 0.5 * (mid + hi);
    const double flmid = f(lmid), frmid = f(rmid);
    const double left = simpson(f, lo, mid, flo, flmid, fmid);
    const double right = simpson(f, mid, hi, fmid, frmid, fhi);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adapt(f, lo, mid, flo, flmid, fmid, left, 0.5 * tol, depth - 1) +
           adapt(f, mid, hi, fmid, frmid, fhi, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

template <typename F>
double adaptive_simpson(F f, double lo, double hi, double tol = 1e-13) {
    const double mid = 0.5 * (lo + hi);
    const double flo = f(lo), fmid = f(mid), fhi = f(hi);
    const double whole = detail::simpson(f, lo, hi, flo, fmid, fhi);
    return detail::adapt(f, lo, hi, flo, fmid, fhi, whole, tol, 30);
}

// Hyperbolic length of a radial segment straight from the line element.
inline double radial_metric_integral(double r_lo, double r_hi) {
    return adaptive_simpson([](double r) { return 2.0 / (1.0 - r * r); }, r_lo, r_hi);
}

// L'Huilier's hyperbolic formula: area from the three sides only.
inline double oracle_area_from_sides(double a, double b, double c) {
    const double s = 0.5 * (a + b + c);
    const double prod = std::tanh(0.5 * s) * std::tanh(0.5 * (s - a)) *
                        std::tanh(0.5 * (s - b)) * std::tanh(0.5 * (s - c));
    return 4.0 * std::atan(std::sqrt(std::max(0.0, prod)));
}

// Angle opposite side a via the hyperbolic law of cosines.
inline double oracle_angle_from_sides(double a, double b, double c) {
    const double arg =
        (std::cosh(b) * std::cosh(c) - std::cosh(a)) / (std::sinh(b) * std::sinh(c));
    return std::acos(std::clamp(arg, -1.0, 1.0));
}

// Uniform-in-area sample with the Euclidean radius capped away from the
// absolute, where double-precision tolerances stay meaningful.
inline Vec2 random_disc_point(std::mt19937& rng, double max_radius = 0.9,
                              double min_radius = 0.0) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double lo2 = min_radius * min_radius, hi2 = max_radius * max_radius;
    const double r = std::sqrt(lo2 + (hi2 - lo2) * unif(rng));
    const double theta = 2.0 * std::numbers::pi * unif(rng);
    return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace hyptri::test
