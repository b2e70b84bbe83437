#pragma once

#include "knotarc/grid.hpp"
#include "knotarc/laurent.hpp"

#include <cstddef>
#include <vector>

namespace knotarc {

struct StateSumOptions {
  /// Diagrams with more crossings are rejected with "too many crossings".
  int crossing_limit = 24;
  /// Order in which crossings are resolved; empty means 0, 1, 2, ...
  std::vector<std::size_t> order;
  /// Worker threads for the top levels of the resolution tree; 0 picks the
  /// hardware concurrency. The result does not depend on this value.
  unsigned threads = 0;
};

struct StateSumResult {
  Laurent1 bracket;  // in the variable A
  int crossing_count = 0;
  int writhe = 0;
};

/// Kauffman bracket by a depth-first sum over all 2^c smoothings, with loops
/// counted by union-find. The A-smoothing joins slots (0,1) and (2,3).
/// Throws std::length_error ("too many crossings") past the limit and
/// std::invalid_argument for a malformed order.
StateSumResult state_sum(const PlanarDiagram& d, const StateSumOptions& options = {});
Laurent1 bracket(const PlanarDiagram& d, const StateSumOptions& options = {});

/// Jones polynomial (-A)^(-3w) <D> written in q = A^-1, so that t = q^4.
Laurent1 jones(const PlanarDiagram& d, const StateSumOptions& options = {});
/// Throws std::invalid_argument unless g is a valid single-component grid.
Laurent1 jones(const GridDiagram& g, const StateSumOptions& options = {});

/// F(a, z) specialised at a = -q^-3, z = q + q^-1.
/// Throws std::domain_error when F has a negative z-degree.
Laurent1 jones_from_F(const Laurent2& F);

}  // namespace knotarc
