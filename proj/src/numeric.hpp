#pragma once

#include <cmath>
#include <utility>

namespace hyptri {

struct ScalarMax {
    double arg = 0.0;
    double value = 0.0;
};

/// Golden-section maximization on (lo, hi). The function is probed only at
/// interior points, so open-domain objectives are fine. Runs until the
/// bracket is narrower than `xtol`.
template <class F>
ScalarMax golden_section_maximize(F&& f, double lo, double hi, double xtol, int max_iter = 200) {
    constexpr double inv_phi = 0.6180339887498949;  // (sqrt(5)-1)/2
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    const double mid = 0.5 * (a + b);
    return {mid, f(mid)};
}

/// Bisection solve of f(x) = target for increasing f, to absolute `xtol` on x.
template <class F>
double bisect_increasing(F&& f, double target, double lo, double hi, double xtol) {
    while (f(hi) < target) {
        lo = hi;
        hi *= 2.0;
    }
    while (hi - lo > xtol) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace hyptri
