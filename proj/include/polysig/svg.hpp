#pragma once

#include <string>

#include "polysig/polyspace.hpp"

namespace polysig {

// SVG 1.1 document drawing the closed polygon. The viewBox fits the bounding
// box with a 5% margin. Even vertices (cone points) are filled circles, odd
// vertices open circles.
std::string svg_polygon_document(const PolygonRealization& realization);

}  // namespace polysig
