#pragma once

#include "kplanar/drawing.hpp"

namespace kplanar {

/// Sign of the orientation determinant of (a, b, c): +1 for a left turn,
/// -1 for a right turn, 0 when collinear. Exact for all finite inputs:
/// a floating-point filter with a fallback to rational arithmetic.
int orientation(Point a, Point b, Point c);

}  // namespace kplanar
