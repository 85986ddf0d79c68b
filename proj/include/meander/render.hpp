#pragma once

#include <string>

#include "meander/meander_graph.hpp"
#include "meander/seaweed.hpp"

namespace meander {

// Text drawing: one row of 'o' vertices, arcs stacked outward by nesting
// depth ('/‾\' rows above, '\_/' rows below), the mirror axis drawn as ':'.
std::string render_ascii(const SeaweedSpec& spec);
std::string render_ascii(const MeanderGraph& g, const std::string& title);

// Standalone SVG: semicircular arcs, dotted mirror axis, vertex labels.
std::string render_svg(const SeaweedSpec& spec);
std::string render_svg(const MeanderGraph& g, const std::string& title);

}  // namespace meander
