#pragma once

#include <string>

#include "mmt/core.hpp"
#include "mmt/norm_ball.hpp"

namespace mmt {

// Deterministic SVG rendering of planar networks (edges with multiplicity
// labels, boundary atoms as filled circles with weight labels) and of
// two-dimensional unit balls (filled polygon through the extreme points).
// Identical input produces byte-identical output.
template <int Tag>
std::string render_network_svg(const BasicNetwork<Tag>& net);

std::string render_ball_svg(const NormBall& ball);

}  // namespace mmt
