#pragma once

#include <knotarc/grid.hpp>

#include <vector>

namespace knotarc::fixtures {

struct Pt {
  long long x;
  long long y;
  friend bool operator==(const Pt&, const Pt&) = default;
  friend auto operator<=>(const Pt&, const Pt&) = default;
};

struct Seg {
  Pt p;
  Pt q;
  int level;
};

/// Planar diagram of a drawing made of closed polylines; at every proper
/// intersection the segment with the higher level passes over.
PlanarDiagram diagram_of(const std::vector<Seg>& segs);

/// The standard pretzel drawing: band i sits at x = 30 i with cells of height
/// 10, a positive entry puts the SW-NE strand over, and the bands are closed
/// by arcs along the top and the bottom.
std::vector<Seg> pretzel_drawing(const std::vector<int>& twists);

}  // namespace knotarc::fixtures
