#include "chord.hpp"

#include <algorithm>
#include <cmath>

#include "triangle.hpp"

namespace hyptri {

namespace {

constexpr double kEndpointExclusion = 1e-6;

double require_off_center(const DiscPoint& b) {
    const double n = b.vec().norm();
    if (n < 1e-12)
        fail(ErrorCode::kDegenerateInput, "segment endpoint coincides with the disc center");
    return n;
}

}  // namespace

DiscPoint EqualAreaChord::sample(double u) const {
    if (!(u >= 0.0) || !(u <= 1.0))
        fail(ErrorCode::kInvalidArgument, "chord parameter must lie in [0, 1]");
    const double s = kEndpointExclusion + u * (1.0 - 2.0 * kEndpointExclusion);
    const Vec2 p = end_near + (end_far - end_near) * s;
    return {p.x, p.y};
}

EqualAreaChord chord_for_angle(const DiscPoint& b, double tau) {
    const double beta = require_off_center(b);
    if (!(tau > 0.0) || !std::isfinite(tau))
        fail(ErrorCode::kInvalidArgument, "chord angle must be positive");
    const double disc = beta * beta - std::sin(tau) * std::sin(tau);
    if (tau >= max_angle_for_point(b) || disc <= 0.0)
        fail(ErrorCode::kChordMissesDisc, "no chord at this angle meets the open disc");

    // Canonical frame: B on the positive x-axis, chord in the upper
    // half-plane. The line leaves B' = (1/beta, 0) at angle tau and meets
    // the absolute at parameters t = (cos tau -+ sqrt(beta^2 - sin^2 tau)) / beta.
    const double root = std::sqrt(disc);
    const double t_near = (std::cos(tau) - root) / beta;
    const double t_far = (std::cos(tau) + root) / beta;
    const Vec2 origin_b_inverse{1.0 / beta, 0.0};
    const Vec2 dir{-std::cos(tau), std::sin(tau)};

    const double phi = std::atan2(b.y(), b.x());
    EqualAreaChord chord{b, invert_in_absolute(b), tau,
                         rotate(origin_b_inverse + dir * t_near, phi),
                         rotate(origin_b_inverse + dir * t_far, phi)};
    return chord;
}

double area_on_chord(const EqualAreaChord& chord, const DiscPoint& c) {
    const Vec2 dir = (chord.end_far - chord.end_near).normalized();
    const double off = cross(dir, c.vec() - chord.end_near);
    if (std::abs(off) > 1e-9)
        fail(ErrorCode::kPointNotOnChord, "point is not on the chord line");
    return measure({DiscPoint{0.0, 0.0}, chord.b_point, c}).defect;
}

double max_angle_for_point(const DiscPoint& b) {
    return std::asin(require_off_center(b));
}

}  // namespace hyptri
