#include "knotarc/bracket.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace knotarc {

namespace {

// Union-find with union by size and an undo log instead of path compression.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(n), size_(n, 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      log_.push_back(-1);
      return;
    }
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    log_.push_back(b);
  }

  void undo() {
    const int b = log_.back();
    log_.pop_back();
    if (b < 0) return;
    const int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
    ++components_;
  }

  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> log_;
  int components_;
};

// tally[a_count * (max_loops + 1) + loops] counts states.
struct Tally {
  int crossings;
  int max_loops;
  std::vector<std::uint64_t> counts;

  Tally(int c, int loops) : crossings(c), max_loops(loops), counts(static_cast<std::size_t>(c + 1) * (loops + 1), 0) {}

  void add(int a_count, int loops) { ++counts[static_cast<std::size_t>(a_count) * (max_loops + 1) + loops]; }

  void merge(const Tally& other) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  }
};

struct Resolver {
  const std::vector<std::array<int, 4>>& crossings;
  const std::vector<std::size_t>& order;
  int free_loops;

  void apply(RollbackUnionFind& uf, std::size_t level, bool a_smoothing) const {
    const auto& e = crossings[order[level]];
    if (a_smoothing) {
      uf.unite(e[0], e[1]);
      uf.unite(e[2], e[3]);
    } else {
      uf.unite(e[0], e[3]);
      uf.unite(e[1], e[2]);
    }
  }

  void revert(RollbackUnionFind& uf) const {
    uf.undo();
    uf.undo();
  }

  void descend(RollbackUnionFind& uf, std::size_t level, int a_count, Tally& tally) const {
    if (level == order.size()) {
      tally.add(a_count, uf.components() + free_loops);
      return;
    }
    for (bool a_smoothing : {true, false}) {
      apply(uf, level, a_smoothing);
      descend(uf, level + 1, a_count + (a_smoothing ? 1 : 0), tally);
      revert(uf);
    }
  }
};

std::vector<std::size_t> resolution_order(const PlanarDiagram& d, const StateSumOptions& options) {
  const std::size_t n = d.crossings.size();
  if (options.order.empty()) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
  }
  std::vector<std::size_t> sorted = options.order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i || sorted.size() != n) {
      throw std::invalid_argument("resolution order must be a permutation of the crossings");
    }
  }
  return options.order;
}

}  // namespace

StateSumResult state_sum(const PlanarDiagram& d, const StateSumOptions& options) {
  const int n = static_cast<int>(d.crossings.size());
  if (n > options.crossing_limit) {
    throw std::length_error("too many crossings: " + std::to_string(n) + " exceeds the limit of " +
                            std::to_string(options.crossing_limit));
  }
  if (n == 0 && d.free_loops == 0) throw std::invalid_argument("empty diagram");

  // Dense edge labels.
  std::map<int, int> dense;
  for (const Crossing& x : d.crossings) {
    for (int e : x.edges) dense.emplace(e, 0);
  }
  int next = 0;
  for (auto& [label, index] : dense) index = next++;
  std::map<int, int> uses;
  std::vector<std::array<int, 4>> crossings;
  for (const Crossing& x : d.crossings) {
    std::array<int, 4> e{};
    for (int s = 0; s < 4; ++s) {
      e[s] = dense[x.edges[s]];
      ++uses[e[s]];
    }
    crossings.push_back(e);
  }
  for (const auto& [label, count] : uses) {
    if (count != 2) throw std::invalid_argument("every edge label must occur exactly twice");
  }

  const std::vector<std::size_t> order = resolution_order(d, options);
  const int edges = next;
  const int max_loops = edges + d.free_loops;
  Resolver resolver{crossings, order, d.free_loops};

  const int split = std::min(n, 6);
  const std::uint64_t tasks = std::uint64_t{1} << split;
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, tasks));

  std::vector<Tally> tallies(threads, Tally(n, max_loops));
  std::atomic<std::uint64_t> next_task{0};
  auto worker = [&](unsigned id) {
    RollbackUnionFind uf(edges);
    for (std::uint64_t task = next_task++; task < tasks; task = next_task++) {
      int a_count = 0;
      for (int level = 0; level < split; ++level) {
        const bool a_smoothing = ((task >> level) & 1) == 0;
        resolver.apply(uf, static_cast<std::size_t>(level), a_smoothing);
        a_count += a_smoothing ? 1 : 0;
      }
      resolver.descend(uf, static_cast<std::size_t>(split), a_count, tallies[id]);
      for (int level = 0; level < split; ++level) resolver.revert(uf);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }
  Tally total(n, max_loops);
  for (const Tally& t : tallies) total.merge(t);

  const Laurent1 delta(Laurent1::Terms{{2, -1}, {-2, -1}});
  std::vector<Laurent1> delta_pow{Laurent1::one()};
  for (int i = 1; i < max_loops; ++i) delta_pow.push_back(mul(delta_pow.back(), delta));

  Laurent1 result;
  for (int a = 0; a <= n; ++a) {
    for (int loops = 1; loops <= max_loops; ++loops) {
      const std::uint64_t count = total.counts[static_cast<std::size_t>(a) * (max_loops + 1) + loops];
      if (count == 0) continue;
      result += mul(Laurent1::monomial(BigInt(count), a - (n - a)), delta_pow[loops - 1]);
    }
  }
  return StateSumResult{result, n, d.writhe()};
}

Laurent1 bracket(const PlanarDiagram& d, const StateSumOptions& options) { return state_sum(d, options).bracket; }

Laurent1 jones(const PlanarDiagram& d, const StateSumOptions& options) {
  const StateSumResult s = state_sum(d, options);
  const int w = s.writhe;
  const Laurent1 normaliser = Laurent1::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
  return mul(s.bracket, normaliser).invert_variable();
}

Laurent1 jones(const GridDiagram& g, const StateSumOptions& options) {
  const auto problems = validate(g, true);
  if (!problems.empty()) throw std::invalid_argument("jones needs a valid knot grid: " + problems.front());
  return jones(to_planar(g), options);
}

Laurent1 jones_from_F(const Laurent2& F) {
  if (!F.is_zero() && F.min_z() < 0) throw std::domain_error("jones_from_F: F has a negative z-degree");
  const Laurent1 a_image = Laurent1::monomial(-1, -3);
  const Laurent1 z_image(Laurent1::Terms{{1, 1}, {-1, 1}});
  return substitute(F, a_image, z_image);
}

}  // namespace knotarc
