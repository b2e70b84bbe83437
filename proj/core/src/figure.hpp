#pragma once

#include <compare>
#include <vector>

namespace knotarc::detail {

struct Point {
  long long x;
  long long y;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

struct Segment {
  Point p;
  Point q;
  int level;  // the higher level passes over at a crossing
};

/// A knot drawn as integer polylines.
class Figure {
 public:
  void line(Point p, Point q, int level = 0);

  /// Draws k crossings between strands at x and x + 10, starting at height y0.
  /// sign > 0 puts the SW-NE strand over. Returns the height above the band.
  long long band(long long x, long long y0, int k, int sign);

  const std::vector<Segment>& segments() const { return segments_; }

 private:
  std::vector<Segment> segments_;
};

struct ArcLayout {
  std::vector<int> xs;
  std::vector<int> os;
};

/// Reads an arc presentation off a drawing.
///
/// The axis is a closed polygon that meets the knot exactly at the binding
/// points, each of which must be an axis vertex. Binding points cut the knot
/// into arcs; an arc lies inside or outside the axis, arcs are stacked by the
/// over/under relation, and the binding points give the rows in axis order.
/// Throws std::logic_error when the drawing violates any of these conditions.
ArcLayout extract_arc_layout(const Figure& figure, const std::vector<Point>& binding,
                             const std::vector<Point>& axis);

}  // namespace knotarc::detail
