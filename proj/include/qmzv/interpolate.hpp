#pragma once

#include <utility>
#include <vector>

#include "qmzv/poly.hpp"

namespace qmzv {

using Point = std::pair<Rat, Rat>;

// Newton divided-difference interpolation. Returns the unique polynomial of
// degree < points.size() through all points; throws DuplicateAbscissa when
// two x-coordinates coincide.
RatPoly poly_interpolate(const std::vector<Point>& points);

}  // namespace qmzv
