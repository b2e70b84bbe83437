#pragma once

#include "knotarc/pretzel.hpp"

#include <array>
#include <string>
#include <vector>

namespace knotarc {

/// Grid diagram on a size x size board. Column c holds an X in row xs[c] and
/// an O in row os[c]; rows and columns are 0-based here and 1-based in the
/// text and JSON formats. Vertical segments pass over horizontal ones.
struct GridDiagram {
  int size = 0;
  std::vector<int> xs;
  std::vector<int> os;

  friend bool operator==(const GridDiagram&, const GridDiagram&) = default;
};

/// One crossing of a planar diagram as four edge labels listed
/// counterclockwise starting from the incoming under-strand. Slots 0 and 2
/// belong to the under-strand, 1 and 3 to the over-strand.
struct Crossing {
  std::array<int, 4> edges;
  int sign;
};

struct PlanarDiagram {
  std::vector<Crossing> crossings;
  /// Components that meet no crossing.
  int free_loops = 0;
  int components = 0;

  int writhe() const;
  int edge_count() const;
};

/// Describes every violated grid axiom; an empty result means the grid is
/// valid. With expect_knot set, a multi-component grid is also a violation.
std::vector<std::string> validate(const GridDiagram& g, bool expect_knot = false);

/// Number of closed curves traced by the grid. The grid must be valid.
int component_count(const GridDiagram& g);

/// Arc presentation of P(-2, q, r) with q + r + 1 arcs; q and r odd, 3 <= q <= r.
GridDiagram construct_minus2(int q, int r);
/// Arc presentation of P(-p, q, r) for q in {2, 3} with p + r + 2 arcs; p, r >= 3.
GridDiagram construct_q23(int p, int q, int r);
/// Arc presentation of P(-p, q, r) for q >= 4 with p + q + r - 2 arcs; p >= 3, r >= q.
GridDiagram construct_q4plus(int p, int q, int r);
/// The constructor that applies to the family member.
GridDiagram construct_family(const FamilySpec& f);

/// Crossings oriented by X to O along columns and O to X along rows.
PlanarDiagram to_planar(const GridDiagram& g);

/// Throws std::invalid_argument on invalid or multi-component grids.
int grid_writhe(const GridDiagram& g);

/// Reverses the column order, which mirrors the diagram.
GridDiagram mirror(const GridDiagram& g);
/// Moves every column `shift` places to the right, wrapping around.
GridDiagram translate_columns(const GridDiagram& g, int shift);

/// One line per row, top row first.
std::string render_ascii(const GridDiagram& g);

/// `grid <k>`, `X: ...`, `O: ...` with 1-based rows, newline-terminated.
std::string to_text(const GridDiagram& g);
GridDiagram parse_grid_text(const std::string& text);
std::string to_json(const GridDiagram& g);
GridDiagram parse_grid_json(const std::string& text);

}  // namespace knotarc
