#pragma once

#include "knotarc/laurent.hpp"
#include "knotarc/pretzel.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <vector>

namespace knotarc {

/// Memo key: the twist list with cancelling +1/-1 pairs removed, sorted.
struct SkeinKey {
  std::vector<int> twists;

  friend bool operator==(const SkeinKey&, const SkeinKey&) = default;
  friend auto operator<=>(const SkeinKey&, const SkeinKey&) = default;
};

SkeinKey canonical_key(std::span<const int> twists);

/// Thread-safe memo table for Lambda values.
class SkeinCache {
 public:
  std::optional<Laurent2> find(const SkeinKey& key) const;
  void insert(const SkeinKey& key, const Laurent2& value);
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::map<SkeinKey, Laurent2> table_;
};

/// Process-wide cache used when no cache is passed explicitly.
SkeinCache& default_cache();

/// Lambda of the pretzel diagram with the given twists. Zero entries and an
/// empty list are allowed: the empty list is the two-component unlink and a
/// zero band splits the diagram into a connected sum.
Laurent2 lambda_twists(std::span<const int> twists, SkeinCache& cache = default_cache());

/// Lambda of P(-m, n).
Laurent2 lambda_two(int m, int n, SkeinCache& cache = default_cache());
Laurent2 lambda_three(int p1, int p2, int p3, SkeinCache& cache = default_cache());
Laurent2 lambda_n(const PretzelSpec& spec, SkeinCache& cache = default_cache());

/// True for specs with more than three bands, where the band reduction goes
/// beyond the three-band recurrences.
bool is_extended(const PretzelSpec& spec);

/// a^-w Lambda with w = standard_writhe(spec).
Laurent2 kauffman_F(const PretzelSpec& spec, SkeinCache& cache = default_cache());

struct SpreadReport {
  int spread;
  PolySummary summary;
};

SpreadReport spread_report(const FamilySpec& f, SkeinCache& cache = default_cache());

}  // namespace knotarc
