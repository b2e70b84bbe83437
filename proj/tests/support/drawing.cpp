#include "drawing.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace knotarc::fixtures {

namespace {

long long cross(Pt o, Pt a, Pt b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

int sgn(long long v) { return (v > 0) - (v < 0); }

struct Param {
  long long num;
  long long den;  // positive
  bool operator<(const Param& o) const { return num * o.den < o.num * den; }
};

// Parameter along pq of a proper intersection with rs.
bool intersect(Pt p, Pt q, Pt r, Pt s, Param& t, Param& u) {
  if (sgn(cross(p, q, r)) * sgn(cross(p, q, s)) >= 0) return false;
  if (sgn(cross(r, s, p)) * sgn(cross(r, s, q)) >= 0) return false;
  long long d = (q.x - p.x) * (s.y - r.y) - (q.y - p.y) * (s.x - r.x);
  long long tn = (r.x - p.x) * (s.y - r.y) - (r.y - p.y) * (s.x - r.x);
  long long un = (r.x - p.x) * (q.y - p.y) - (r.y - p.y) * (q.x - p.x);
  if (d < 0) {
    d = -d;
    tn = -tn;
    un = -un;
  }
  t = {tn, d};
  u = {un, d};
  return true;
}

std::vector<std::vector<Seg>> closed_paths(const std::vector<Seg>& segs) {
  std::map<Pt, std::vector<std::size_t>> adj;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    adj[segs[i].p].push_back(i);
    adj[segs[i].q].push_back(i);
  }
  for (const auto& [pt, v] : adj) {
    if (v.size() != 2) throw std::logic_error("drawing vertex without degree 2");
  }
  std::vector<bool> used(segs.size(), false);
  std::vector<std::vector<Seg>> out;
  for (std::size_t s0 = 0; s0 < segs.size(); ++s0) {
    if (used[s0]) continue;
    std::vector<Seg> path;
    const Pt start = segs[s0].p;
    Pt cur = start;
    std::size_t i = s0;
    while (true) {
      used[i] = true;
      const Seg& s = segs[i];
      if (s.p == cur) {
        path.push_back(s);
        cur = s.q;
      } else {
        path.push_back({s.q, s.p, s.level});
        cur = s.p;
      }
      if (cur == start) break;
      const auto& pair = adj[cur];
      i = pair[0] == i ? pair[1] : pair[0];
    }
    out.push_back(std::move(path));
  }
  return out;
}

}  // namespace

PlanarDiagram diagram_of(const std::vector<Seg>& segs) {
  const auto paths = closed_paths(segs);
  struct Ref {
    std::size_t path;
    std::size_t seg;
  };
  std::vector<Ref> flat;
  for (std::size_t c = 0; c < paths.size(); ++c) {
    for (std::size_t s = 0; s < paths[c].size(); ++s) flat.push_back({c, s});
  }
  struct Event {
    Param t;
    int id;
    bool over;
  };
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Event>> events;
  struct Dirs {
    Pt over{};
    Pt under{};
  };
  std::vector<Dirs> dirs;
  for (std::size_t a = 0; a < flat.size(); ++a) {
    for (std::size_t b = a + 1; b < flat.size(); ++b) {
      const Seg& sa = paths[flat[a].path][flat[a].seg];
      const Seg& sb = paths[flat[b].path][flat[b].seg];
      Param t{};
      Param u{};
      if (!intersect(sa.p, sa.q, sb.p, sb.q, t, u)) continue;
      if (sa.level == sb.level) throw std::logic_error("crossing between equal levels");
      const int id = static_cast<int>(dirs.size());
      const bool a_over = sa.level > sb.level;
      const Pt da{sa.q.x - sa.p.x, sa.q.y - sa.p.y};
      const Pt db{sb.q.x - sb.p.x, sb.q.y - sb.p.y};
      dirs.push_back(a_over ? Dirs{da, db} : Dirs{db, da});
      events[{flat[a].path, flat[a].seg}].push_back({t, id, a_over});
      events[{flat[b].path, flat[b].seg}].push_back({u, id, !a_over});
    }
  }
  const int n = static_cast<int>(dirs.size());
  std::vector<int> over_in(n), over_out(n), under_in(n), under_out(n);
  PlanarDiagram d;
  d.components = static_cast<int>(paths.size());
  int next = 0;
  for (std::size_t c = 0; c < paths.size(); ++c) {
    std::vector<Event> seq;
    for (std::size_t s = 0; s < paths[c].size(); ++s) {
      auto it = events.find({c, s});
      if (it == events.end()) continue;
      auto list = it->second;
      std::sort(list.begin(), list.end(), [](const Event& x, const Event& y) { return x.t < y.t; });
      seq.insert(seq.end(), list.begin(), list.end());
    }
    if (seq.empty()) {
      ++d.free_loops;
      continue;
    }
    const int m = static_cast<int>(seq.size());
    for (int i = 0; i < m; ++i) {
      const int in = next + i;
      const int out = next + (i + 1) % m;
      if (seq[i].over) {
        over_in[seq[i].id] = in;
        over_out[seq[i].id] = out;
      } else {
        under_in[seq[i].id] = in;
        under_out[seq[i].id] = out;
      }
    }
    next += m;
  }
  for (int id = 0; id < n; ++id) {
    const Pt o = dirs[id].over;
    const Pt u = dirs[id].under;
    const int sign = sgn(o.x * u.y - o.y * u.x);
    Crossing x{};
    x.sign = sign;
    x.edges[0] = under_in[id];
    x.edges[2] = under_out[id];
    x.edges[1] = sign > 0 ? over_out[id] : over_in[id];
    x.edges[3] = sign > 0 ? over_in[id] : over_out[id];
    d.crossings.push_back(x);
  }
  return d;
}

std::vector<Seg> pretzel_drawing(const std::vector<int>& twists) {
  std::vector<Seg> segs;
  const long long n = static_cast<long long>(twists.size());
  long long h = 1;
  for (int t : twists) h = std::max<long long>(h, std::abs(t));
  const long long top = 10 * h + 20;
  for (long long i = 0; i < n; ++i) {
    const int t = twists[i];
    const long long xl = 30 * i;
    const long long xr = xl + 10;
    long long y = 10;
    segs.push_back({{xl, 0}, {xl, y}, 0});
    segs.push_back({{xr, 0}, {xr, y}, 0});
    for (int k = 0; k < std::abs(t); ++k) {
      segs.push_back({{xl, y}, {xr, y + 10}, t > 0 ? 1 : 0});
      segs.push_back({{xr, y}, {xl, y + 10}, t > 0 ? 0 : 1});
      y += 10;
    }
    segs.push_back({{xl, y}, {xl, top}, 0});
    segs.push_back({{xr, y}, {xr, top}, 0});
    if (i < n - 1) {
      segs.push_back({{xr, top}, {xr + 20, top}, 0});
      segs.push_back({{xr, 0}, {xr + 20, 0}, 0});
    }
  }
  const long long w = 30 * (n - 1) + 10;
  segs.push_back({{0, top}, {0, top + 10}, 0});
  segs.push_back({{0, top + 10}, {w, top + 10}, 0});
  segs.push_back({{w, top + 10}, {w, top}, 0});
  segs.push_back({{0, 0}, {0, -10}, 0});
  segs.push_back({{0, -10}, {w, -10}, 0});
  segs.push_back({{w, -10}, {w, 0}, 0});
  return segs;
}

}  // namespace knotarc::fixtures
