#include "figure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace knotarc::detail {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::logic_error("arc layout extraction failed: " + what);
}

long long orient(Point a, Point b, Point c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

int sgn(long long v) { return (v > 0) - (v < 0); }

bool crosses_properly(Point p, Point q, Point r, Point s) {
  return sgn(orient(p, q, r)) * sgn(orient(p, q, s)) < 0 && sgn(orient(r, s, p)) * sgn(orient(r, s, q)) < 0;
}

bool on_segment(Point t, Point p, Point q) {
  if (orient(p, q, t) != 0) return false;
  const long long dot = (t.x - p.x) * (q.x - p.x) + (t.y - p.y) * (q.y - p.y);
  const long long len = (q.x - p.x) * (q.x - p.x) + (q.y - p.y) * (q.y - p.y);
  return dot >= 0 && dot <= len;
}

long long dist2(Point a, Point b) { return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y); }

bool inside_polygon(Point t, const std::vector<Point>& poly) {
  bool inside = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = poly[i];
    const Point b = poly[(i + 1) % n];
    if ((a.y > t.y) == (b.y > t.y)) continue;
    // Horizontal ray to the right; compare the edge's x at height t.y with t.x.
    const long long dy = b.y - a.y;
    const long long num = (a.x - t.x) * dy + (t.y - a.y) * (b.x - a.x);
    if (sgn(num) * sgn(dy) > 0) inside = !inside;
  }
  return inside;
}

std::vector<Segment> split_at(const std::vector<Segment>& segs, const std::vector<Point>& cuts) {
  std::vector<Segment> out;
  for (const Segment& s : segs) {
    std::vector<Point> interior;
    for (const Point& c : cuts) {
      if (c != s.p && c != s.q && on_segment(c, s.p, s.q)) interior.push_back(c);
    }
    std::sort(interior.begin(), interior.end(),
              [&](const Point& a, const Point& b) { return dist2(a, s.p) < dist2(b, s.p); });
    Point from = s.p;
    for (const Point& c : interior) {
      out.push_back({from, c, s.level});
      from = c;
    }
    out.push_back({from, s.q, s.level});
  }
  return out;
}

// Oriented closed paths; the first starts at segment 0 heading from p to q.
std::vector<std::vector<Segment>> closed_paths(const std::vector<Segment>& segs) {
  std::map<Point, std::vector<std::size_t>> adjacent;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    adjacent[segs[i].p].push_back(i);
    adjacent[segs[i].q].push_back(i);
  }
  for (const auto& [pt, list] : adjacent) {
    if (list.size() != 2) fail("vertex (" + std::to_string(pt.x) + "," + std::to_string(pt.y) + ") does not have degree 2");
  }
  std::vector<bool> used(segs.size(), false);
  std::vector<std::vector<Segment>> paths;
  for (std::size_t s0 = 0; s0 < segs.size(); ++s0) {
    if (used[s0]) continue;
    std::vector<Segment> path;
    const Point start = segs[s0].p;
    Point cur = start;
    std::size_t i = s0;
    while (true) {
      used[i] = true;
      const Segment& s = segs[i];
      if (s.p == cur) {
        path.push_back(s);
        cur = s.q;
      } else {
        path.push_back({s.q, s.p, s.level});
        cur = s.p;
      }
      if (cur == start) break;
      const auto& pair = adjacent[cur];
      i = pair[0] == i ? pair[1] : pair[0];
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

struct Arc {
  int from = -1;
  int to = -1;
  std::vector<Segment> segs;
  bool inside = false;
};

Point doubled(Point p) { return {2 * p.x, 2 * p.y}; }

}  // namespace

void Figure::line(Point p, Point q, int level) { segments_.push_back({p, q, level}); }

long long Figure::band(long long x, long long y0, int k, int sign) {
  long long y = y0;
  for (int i = 0; i < k; ++i) {
    if (sign > 0) {
      line({x, y}, {x + 10, y + 10}, 1);
      line({x + 10, y}, {x, y + 10}, 0);
    } else {
      line({x, y}, {x + 10, y + 10}, 0);
      line({x + 10, y}, {x, y + 10}, 1);
    }
    y += 10;
  }
  return y;
}

ArcLayout extract_arc_layout(const Figure& figure, const std::vector<Point>& binding_in,
                             const std::vector<Point>& axis_in) {
  std::vector<Point> binding;
  for (const Point& b : binding_in) binding.push_back(doubled(b));
  if (std::set<Point>(binding.begin(), binding.end()).size() != binding.size()) fail("repeated binding point");

  std::vector<Point> axis;
  for (const Point& a : axis_in) {
    const Point d = doubled(a);
    if (axis.empty() || axis.back() != d) axis.push_back(d);
  }
  while (axis.size() > 1 && axis.front() == axis.back()) axis.pop_back();
  if (axis.size() < 3) fail("axis polygon is degenerate");
  long long area = 0;
  for (std::size_t i = 0; i < axis.size(); ++i) {
    const Point a = axis[i];
    const Point b = axis[(i + 1) % axis.size()];
    area += a.x * b.y - b.x * a.y;
  }
  if (area < 0) std::reverse(axis.begin(), axis.end());

  std::vector<Segment> scaled;
  for (const Segment& s : figure.segments()) scaled.push_back({doubled(s.p), doubled(s.q), s.level});
  const std::vector<Segment> segs = split_at(scaled, binding);
  auto paths = closed_paths(segs);
  if (paths.size() != 1) fail("not a knot: " + std::to_string(paths.size()) + " components");
  std::vector<Segment> path = std::move(paths.front());

  std::map<Point, int> binding_index;
  for (std::size_t i = 0; i < binding.size(); ++i) binding_index[binding[i]] = static_cast<int>(i);
  for (const Point& b : binding) {
    if (std::find(axis.begin(), axis.end(), b) == axis.end()) fail("binding point is not an axis vertex");
  }
  for (std::size_t i = 0; i < axis.size(); ++i) {
    const Point a1 = axis[i];
    const Point a2 = axis[(i + 1) % axis.size()];
    for (const Segment& s : segs) {
      if (crosses_properly(a1, a2, s.p, s.q)) fail("axis crosses the knot");
      for (const Point& v : {s.p, s.q}) {
        if (on_segment(v, a1, a2) && !binding_index.count(v)) fail("axis touches the knot off the binding points");
      }
    }
  }

  auto first = std::find_if(path.begin(), path.end(), [&](const Segment& s) { return binding_index.count(s.p) > 0; });
  if (first == path.end()) fail("knot misses every binding point");
  std::rotate(path.begin(), first, path.end());

  std::vector<Arc> arcs;
  for (const Segment& s : path) {
    if (auto it = binding_index.find(s.p); it != binding_index.end()) {
      arcs.emplace_back();
      arcs.back().from = it->second;
    }
    arcs.back().segs.push_back(s);
    if (auto it = binding_index.find(s.q); it != binding_index.end()) arcs.back().to = it->second;
  }
  if (arcs.size() != binding.size()) fail("binding points off the knot");

  for (Arc& arc : arcs) {
    std::set<bool> sides;
    for (const Segment& s : arc.segs) {
      // Coordinates are doubled, so the midpoint is a lattice point.
      const Point mid{(s.p.x + s.q.x) / 2, (s.p.y + s.q.y) / 2};
      sides.insert(inside_polygon(mid, axis));
    }
    if (sides.size() != 1) fail("arc lies on both sides of the axis");
    arc.inside = *sides.begin();
  }

  const std::size_t k = arcs.size();
  std::set<std::pair<std::size_t, std::size_t>> over;  // (over arc, under arc)
  for (std::size_t ai = 0; ai < k; ++ai) {
    for (std::size_t aj = ai; aj < k; ++aj) {
      for (std::size_t si = 0; si < arcs[ai].segs.size(); ++si) {
        for (std::size_t sj = (ai == aj ? si + 1 : 0); sj < arcs[aj].segs.size(); ++sj) {
          const Segment& a = arcs[ai].segs[si];
          const Segment& b = arcs[aj].segs[sj];
          if (!crosses_properly(a.p, a.q, b.p, b.q)) continue;
          if (ai == aj) fail("arc crosses itself");
          if (arcs[ai].inside != arcs[aj].inside) fail("crossing between arcs on different sides");
          if (a.level == b.level) fail("crossing between segments on the same level");
          const auto pair = a.level > b.level ? std::make_pair(ai, aj) : std::make_pair(aj, ai);
          if (over.count({pair.second, pair.first})) fail("arcs cross over each other both ways");
          over.insert(pair);
        }
      }
    }
  }

  std::vector<int> indegree(k, 0);
  std::vector<std::vector<std::size_t>> above(k);
  for (const auto& [o, u] : over) {
    above[u].push_back(o);
    ++indegree[o];
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < k; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::vector<std::size_t> height(k, 0);
  std::size_t placed = 0;
  while (!ready.empty()) {
    const std::size_t i = ready.top();
    ready.pop();
    height[i] = placed++;
    for (std::size_t j : above[i]) {
      if (--indegree[j] == 0) ready.push(j);
    }
  }
  if (placed != k) fail("over/under relation between arcs is cyclic");

  std::vector<std::size_t> inner;
  std::vector<std::size_t> outer;
  for (std::size_t i = 0; i < k; ++i) (arcs[i].inside ? inner : outer).push_back(i);
  std::sort(inner.begin(), inner.end(), [&](std::size_t a, std::size_t b) { return height[a] > height[b]; });
  std::sort(outer.begin(), outer.end(), [&](std::size_t a, std::size_t b) { return height[a] < height[b]; });
  std::vector<std::size_t> columns = inner;
  columns.insert(columns.end(), outer.begin(), outer.end());
  std::reverse(columns.begin(), columns.end());

  std::vector<int> row_of(binding.size(), -1);
  int row = 0;
  for (const Point& a : axis) {
    if (auto it = binding_index.find(a); it != binding_index.end()) {
      if (row_of[it->second] >= 0) fail("binding point repeated on the axis");
      row_of[it->second] = row++;
    }
  }

  ArcLayout layout;
  for (std::size_t c : columns) {
    layout.xs.push_back(row_of[arcs[c].from]);
    layout.os.push_back(row_of[arcs[c].to]);
  }
  return layout;
}

}  // namespace knotarc::detail
