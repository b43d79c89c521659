#pragma once

#include <string>

#include "triweights/complex.hpp"

namespace triweights {

// Cell partition as a standalone SVG: filled cell polygons, the triangle
// outline, and gray markers on the generator points. `scale` is pixels
// per coordinate unit. Output is deterministic for a given input.
std::string cells_svg(const DofComplex& c, double scale = 120.0);

}  // namespace triweights
