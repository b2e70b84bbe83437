#pragma once

#include "knotarc/grid.hpp"
#include "knotarc/laurent.hpp"
#include "knotarc/pretzel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace knotarc {

struct Verdict {
  bool exact = false;
  int lo = 0;
  int hi = 0;

  static Verdict exactly(int v) { return {true, v, v}; }
  static Verdict interval(int lo, int hi) { return {false, lo, hi}; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct UpperBounds {
  int construction;  // size of the explicit grid
  int theorem;       // c(K) = p + q + r
};

struct BoundsReport {
  FamilySpec family;
  int crossing_number;
  int spread;
  int lower;
  int upper_construction;
  int upper_cminus;
  Verdict verdict;
  /// Which bound realises the verdict's upper end: "construction" or "crossing number".
  std::string upper_source;
  GridDiagram grid;
  PolySummary summary;
};

/// spread_a(F) + 2.
int lower_bound(const FamilySpec& f);
UpperBounds upper_bound(const FamilySpec& f);
BoundsReport verdict(const FamilySpec& f);

/// `exact 8 = c(K)-1` or `interval [6, 9]`.
std::string describe(const Verdict& v, int crossing_number);

/// The arc index the closed-form results give for the family member, if any:
/// exact c for q = 2, exact c-1 for q = 3, exact c-2 for q = 4 and p, r >= 5,
/// the interval [c-3, c-2] for p = 3, q = 4, r >= 5 and [spread+2, c-1] for p = 2.
std::optional<Verdict> theorem_verdict(const FamilySpec& f, int lower);

struct TableRow {
  std::string name;
  std::optional<std::string> dt_name;
  int lower;
  /// Arc index from published knot tables; reference data, never computed.
  std::optional<int> external_arc_index;
  int upper;
  Verdict verdict;
  /// c-3 for the second table, empty for the first.
  std::optional<int> theorem_lower;
};

/// Rows of table 1 (P(-2,q,r)) or table 2 (P(-3,4,r)).
/// Throws std::invalid_argument for any other table number.
std::vector<TableRow> make_table(int which);

/// Columns: name, dt_name, lower, external_arc_index, upper, verdict, theorem_lower.
std::string table_tsv(const std::vector<TableRow>& rows);
std::string table_json(const std::vector<TableRow>& rows);

struct IntRange {
  int lo;
  int hi;
};

struct SweepItem {
  int p;
  int q;
  int r;
  std::optional<BoundsReport> report;
  std::string error;
};

/// Reports for every family member in the ranges, in (p, q, r) order, with
/// triples that are not family members skipped. Items whose crossing number
/// exceeds max_crossings, or whose evaluation throws, carry an error instead.
std::vector<SweepItem> sweep(IntRange p, IntRange q, IntRange r, int max_crossings = 30);

std::string report_json(const BoundsReport& report);

}  // namespace knotarc
