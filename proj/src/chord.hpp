#pragma once

#include "disc.hpp"

namespace hyptri {

/// Chord of the absolute whose continuation passes through the inverse
/// image B' of a fixed point B. With A at the disc center, every point C on
/// the chord closes a triangle ABC of the same area 2*tau, where tau is the
/// angle the chord makes with segment AB' at B'.
struct EqualAreaChord {
    DiscPoint b_point;       // B
    InversePoint b_inverse;  // B'
    double tau;              // angle at B', in (0, arcsin|B|)
    Vec2 end_near;           // chord endpoint on the absolute nearer to B'
    Vec2 end_far;

    /// Interior chord point; u in [0, 1] maps onto the chord with the
    /// 1e-6-neighbourhoods of the endpoints excluded (triangle angles
    /// degenerate on the absolute itself).
    DiscPoint sample(double u) const;
};

/// Builds the equal-area chord for segment from the origin to b at angle
/// tau. With B rotated onto the positive x-axis the chord lives in the
/// upper half-plane; the mirror chord gives congruent triangles.
EqualAreaChord chord_for_angle(const DiscPoint& b, double tau);

/// Area of triangle (origin, chord's B, c) for c on the chord; equal to
/// 2 * chord.tau for every admissible c. Throws kPointNotOnChord when c is
/// more than 1e-9 off the chord line.
double area_on_chord(const EqualAreaChord& chord, const DiscPoint& c);

/// Largest angle at which a line through the inverse image of b still meets
/// the open disc: arcsin(|b|).
double max_angle_for_point(const DiscPoint& b);

}  // namespace hyptri
