#include "kplanar/predicates.hpp"

#include <cmath>

#include <gmpxx.h>

namespace kplanar {

namespace {

// (3 + 16 eps) eps with eps = 2^-53; the static bound on the absolute
// error of the double-precision determinant.
constexpr double kOrientErrorBound = 3.3306690738754716e-16;

int exact_orientation(Point a, Point b, Point c) {
  mpq_class ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  mpq_class det = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx);
  return sgn(det);
}

}  // namespace

int orientation(Point a, Point b, Point c) {
  const double left = (a.x - c.x) * (b.y - c.y);
  const double right = (a.y - c.y) * (b.x - c.x);
  const double det = left - right;
  const double bound = kOrientErrorBound * (std::abs(left) + std::abs(right));
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return exact_orientation(a, b, c);
}

}  // namespace kplanar
