#pragma once

#include <string>

#include "max_area.hpp"

namespace hyptri {

/// Construction figure for a max-area solution: the absolute, the circle
/// omega, the inverse point B', the tangent chord through B' and C, and the
/// triangle ABC with its curved side drawn as a true circular arc. The unit
/// disc fills a 1000 x 1000 viewport with the y-axis pointing up; output is
/// byte-deterministic for equal inputs.
std::string render_construction_svg(const MaxAreaSolution& sol);

}  // namespace hyptri
