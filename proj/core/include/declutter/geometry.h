#pragma once

#include <cmath>

namespace declutter {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
};

inline double Cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double Dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double Norm(Point a) { return std::hypot(a.x, a.y); }

// Twice the signed area of (a, b, c); positive for counter-clockwise.
inline double Orientation(Point a, Point b, Point c) {
  return Cross(b - a, c - a);
}

inline constexpr double kCollinearEpsilon = 1e-12;

enum class SegmentRelation {
  kDisjoint,
  kCrossing,      // single common point interior to both segments
  kTouching,      // an endpoint lies on the other segment
  kOverlapping,   // collinear with a common sub-segment of positive length
};

// Relation between segments [p1,p2] and [q1,q2]; orientation values within
// kCollinearEpsilon of zero are treated as collinear.
SegmentRelation ClassifySegments(Point p1, Point p2, Point q1, Point q2);

// Non-reflex angle in [0, pi] between two direction vectors.
inline double AngleBetween(Point a, Point b) {
  return std::atan2(std::abs(Cross(a, b)), Dot(a, b));
}

}  // namespace declutter
