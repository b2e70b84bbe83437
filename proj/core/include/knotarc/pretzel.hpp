#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace knotarc {

/// Twist vector of a pretzel diagram; a positive entry is a band whose
/// SW-NE strand passes over.
class PretzelSpec {
 public:
  /// Throws std::invalid_argument if the list is empty or holds a zero.
  explicit PretzelSpec(std::vector<int> twists);

  const std::vector<int>& twists() const { return twists_; }
  std::size_t size() const { return twists_.size(); }

  friend bool operator==(const PretzelSpec&, const PretzelSpec&) = default;
  friend auto operator<=>(const PretzelSpec&, const PretzelSpec&) = default;

 private:
  std::vector<int> twists_;
};

/// The knot P(-p, q, r) with p, q, r >= 2, r >= q and at most one even entry.
struct FamilySpec {
  int p;
  int q;
  int r;

  /// Throws std::invalid_argument when the family constraints fail.
  FamilySpec(int p, int q, int r);

  PretzelSpec pretzel() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// True when (p, q, r) satisfies the FamilySpec constraints.
bool is_family(int p, int q, int r);

/// At most one even entry. Throws std::invalid_argument unless there are three bands.
bool is_knot(const PretzelSpec& spec);

int crossing_number(const FamilySpec& f);

/// Number of link components of the standard diagram.
int component_count(const PretzelSpec& spec);

/// Writhe of the standard diagram with each component oriented by a trace
/// that leaves the top-left band endpoint upward and then heads right.
int standard_writhe(const PretzelSpec& spec);

PretzelSpec mirror(const PretzelSpec& spec);

/// Distinct orderings of (-p, q, r) in lexicographic order.
std::vector<PretzelSpec> permutations(const FamilySpec& f);

/// Parses `P(a,b,...)`; spaces are allowed around every token.
/// Throws std::invalid_argument with a description of the first problem.
PretzelSpec parse_pretzel(std::string_view text);

std::string to_string(const PretzelSpec& spec);
std::string to_string(const FamilySpec& f);

}  // namespace knotarc
