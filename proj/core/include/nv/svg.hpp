#pragma once

#include <string>

#include "nv/element.hpp"

namespace nv {

/// Renders a two-dimensional element as an SVG document with the domain
/// partition on the left and the codomain partition on the right.
/// Coordinate 1 halves the unit square horizontally (bit 0 = left half),
/// coordinate 2 vertically (bit 0 = bottom half); matching cells share an
/// index label.  Throws BadDimension unless the arity is 2.
std::string render_partition_svg(const Element& e);

/// Plain-text cell listing used as the rendering fallback for arity >= 3.
std::string render_cells_text(const Element& e);

} // namespace nv
