#pragma once

// SVG drawings in the style of the hand-drawn arc diagrams: the integers on a
// horizontal line, each arc as an upper semicircle.
//
// Element classes are stable so documents can be inspected structurally:
// "tick" (one <line> per integer of the window), "arc" (one <path> per member
// arc in the window), "fountain" (marker under a fountain vertex), "vertex"
// (<circle> per quiver vertex) and "edge" (<line> per arrow).

#include <string>

#include "infgon/arcs.hpp"
#include "infgon/quiver.hpp"

namespace infgon {

std::string render_svg(const ArcFamily& f, Window w);
std::string render_svg(const Quiver& q, Window w);

}  // namespace infgon
