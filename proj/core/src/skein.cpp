#include "knotarc/skein.hpp"

#include <algorithm>
#include <cstdlib>

namespace knotarc {

SkeinKey canonical_key(std::span<const int> twists) {
  std::vector<int> t(twists.begin(), twists.end());
  while (true) {
    auto first = std::find(t.begin(), t.end(), 1);
    auto second = std::find(t.begin(), t.end(), -1);
    if (first == t.end() || second == t.end()) break;
    if (first > second) std::swap(first, second);
    t.erase(second);
    t.erase(first);
  }
  std::sort(t.begin(), t.end());
  return SkeinKey{std::move(t)};
}

std::optional<Laurent2> SkeinCache::find(const SkeinKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void SkeinCache::insert(const SkeinKey& key, const Laurent2& value) {
  std::unique_lock lock(mutex_);
  table_.emplace(key, value);
}

std::size_t SkeinCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void SkeinCache::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
}

SkeinCache& default_cache() {
  static SkeinCache cache;
  return cache;
}

namespace {

Laurent2 compute(const std::vector<int>& t, SkeinCache& cache);

Laurent2 lookup(std::vector<int> t, SkeinCache& cache) {
  SkeinKey key = canonical_key(t);
  if (auto hit = cache.find(key)) return *hit;
  Laurent2 value = compute(key.twists, cache);
  cache.insert(key, value);
  return value;
}

Laurent2 compute(const std::vector<int>& t, SkeinCache& cache) {
  const std::size_t n = t.size();
  if (n == 0) return Laurent2::delta();

  auto zero = std::find(t.begin(), t.end(), 0);
  if (zero != t.end()) {
    if (n == 1) return Laurent2::one();
    if (n == 2) {
      const int other = t[0] + t[1];
      if (other == 0) return Laurent2::delta();
      if (std::abs(other) == 1) return Laurent2::monomial(1, other, 0);
    } else {
      Laurent2 product = Laurent2::one();
      for (auto it = t.begin(); it != t.end(); ++it) {
        if (it == zero) continue;
        product = mul(product, lookup({0, *it}, cache));
      }
      return product;
    }
  }

  std::size_t i = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (std::abs(t[j]) > std::abs(t[i])) i = j;
  }
  const int p = t[i];
  const int s = p > 0 ? 1 : -1;
  if (n == 1 && std::abs(p) == 1) return Laurent2::monomial(1, -p, 0);

  auto replaced = [&](int v) {
    std::vector<int> u = t;
    u[i] = v;
    return u;
  };
  std::vector<int> deleted = t;
  deleted.erase(deleted.begin() + static_cast<std::ptrdiff_t>(i));

  // Lambda(D+) + Lambda(D-) = z (Lambda(D0) + Lambda(Dinf)) on the band's last
  // crossing. The Dinf smoothing deletes the band and leaves |p| - 1 kinks.
  if (std::abs(p) == 1) {
    Laurent2 r = -lookup(replaced(-s), cache);
    r += mono_mul(add(lookup(replaced(0), cache), lookup(deleted, cache)), 1, 0, 1);
    return r;
  }
  Laurent2 r = -lookup(replaced(p - 2 * s), cache);
  r += mono_mul(lookup(replaced(p - s), cache), 1, 0, 1);
  r += mono_mul(lookup(deleted, cache), 1, -s * (std::abs(p) - 1), 1);
  return r;
}

}  // namespace

Laurent2 lambda_twists(std::span<const int> twists, SkeinCache& cache) {
  return lookup(std::vector<int>(twists.begin(), twists.end()), cache);
}

Laurent2 lambda_two(int m, int n, SkeinCache& cache) {
  const int t[] = {-m, n};
  return lambda_twists(t, cache);
}

Laurent2 lambda_three(int p1, int p2, int p3, SkeinCache& cache) {
  const int t[] = {p1, p2, p3};
  return lambda_twists(t, cache);
}

Laurent2 lambda_n(const PretzelSpec& spec, SkeinCache& cache) { return lambda_twists(spec.twists(), cache); }

bool is_extended(const PretzelSpec& spec) { return spec.size() > 3; }

Laurent2 kauffman_F(const PretzelSpec& spec, SkeinCache& cache) {
  return mono_mul(lambda_n(spec, cache), 1, -standard_writhe(spec), 0);
}

SpreadReport spread_report(const FamilySpec& f, SkeinCache& cache) {
  Laurent2 lambda = lambda_n(f.pretzel(), cache);
  return SpreadReport{spread_a(lambda), summarize(lambda)};
}

}  // namespace knotarc
