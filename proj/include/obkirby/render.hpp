#pragma once

#include <string>

#include "obkirby/heegaard.hpp"
#include "obkirby/kirby.hpp"

namespace ob {

// Deterministic standalone SVG 1.1 pictures: dotted balls / page handles
// along the top, one labeled row per component or curve, handle counts in
// the footer. Layout depends only on the diagram, never on the environment.
std::string render_svg(const KirbyDiagram& kd);
std::string render_svg(const HeegaardDiagram& hd);

}  // namespace ob
