#include "declutter/geometry.h"

#include <algorithm>

namespace declutter {

namespace {

int Sign(double v) {
  if (v > kCollinearEpsilon) return 1;
  if (v < -kCollinearEpsilon) return -1;
  return 0;
}

// Projection parameter of c onto the line through a and b.
double Param(Point a, Point b, Point c) {
  const Point d = b - a;
  return Dot(c - a, d) / Dot(d, d);
}

bool OnSegment(Point a, Point b, Point c) {
  return std::min(a.x, b.x) - kCollinearEpsilon <= c.x &&
         c.x <= std::max(a.x, b.x) + kCollinearEpsilon &&
         std::min(a.y, b.y) - kCollinearEpsilon <= c.y &&
         c.y <= std::max(a.y, b.y) + kCollinearEpsilon;
}

}  // namespace

SegmentRelation ClassifySegments(Point p1, Point p2, Point q1, Point q2) {
  const int o1 = Sign(Orientation(p1, p2, q1));
  const int o2 = Sign(Orientation(p1, p2, q2));
  const int o3 = Sign(Orientation(q1, q2, p1));
  const int o4 = Sign(Orientation(q1, q2, p2));

  if (o1 == 0 && o2 == 0) {
    // Collinear (or a degenerate zero-length segment).
    if (p1 == p2) {
      return OnSegment(q1, q2, p1) ? SegmentRelation::kTouching
                                   : SegmentRelation::kDisjoint;
    }
    double t0 = Param(p1, p2, q1);
    double t1 = Param(p1, p2, q2);
    if (t0 > t1) std::swap(t0, t1);
    const double lo = std::max(0.0, t0);
    const double hi = std::min(1.0, t1);
    const double eps = kCollinearEpsilon / Norm(p2 - p1);
    if (hi - lo > eps) return SegmentRelation::kOverlapping;
    if (hi - lo >= -eps) return SegmentRelation::kTouching;
    return SegmentRelation::kDisjoint;
  }
  if (o1 * o2 < 0 && o3 * o4 < 0) return SegmentRelation::kCrossing;
  if ((o1 == 0 && OnSegment(p1, p2, q1)) || (o2 == 0 && OnSegment(p1, p2, q2)) ||
      (o3 == 0 && OnSegment(q1, q2, p1)) || (o4 == 0 && OnSegment(q1, q2, p2))) {
    return SegmentRelation::kTouching;
  }
  return SegmentRelation::kDisjoint;
}

}  // namespace declutter
