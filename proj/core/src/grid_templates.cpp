// Drawings of the standard arc presentations of P(-p, q, r). Each template
// places the twist boxes as bands on a 10-unit lattice, routes the closing
// strands, and lists the axis polygon through the binding points.

#include "figure.hpp"
#include "knotarc/grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace knotarc {

namespace {

using detail::Figure;
using detail::Point;

struct Template {
  Figure figure;
  std::vector<Point> binding;
  std::vector<Point> axis;
};

// Binding points stacked on one vertical line, with a helper vertex between
// consecutive points so the axis zigzags beside the strand.
void zigzag(std::vector<Point>& axis, const std::vector<Point>& stack, long long helper_x, long long helper_dy) {
  for (std::size_t i = 0; i < stack.size(); ++i) {
    axis.push_back(stack[i]);
    if (i + 1 < stack.size()) axis.push_back({helper_x, stack[i].y + helper_dy});
  }
}

std::vector<Point> column(long long x, long long from, long long to, long long step) {
  std::vector<Point> pts;
  for (long long y = from; step > 0 ? y <= to : y >= to; y += step) pts.push_back({x, y});
  return pts;
}

Template minus2_template(int q, int r) {
  Template t;
  Figure& f = t.figure;
  const long long yq = 15 + 10LL * (q - 1);
  const long long yr = 15 + 10LL * (r - 1);
  const long long top = std::max(15 + 10LL * q, yr) + 10;
  const long long top2 = top + 10;

  f.line({0, 0}, {0, 20});
  f.line({10, 10}, {10, 20});
  f.band(0, 20, 1, -1);
  f.line({0, 30}, {0, top});
  f.line({10, 30}, {10, top2}, 1);

  f.line({30, 10}, {30, 15});
  f.line({40, 10}, {40, 15});
  const long long top_q = f.band(30, 15, q, +1);
  f.line({30, top_q}, {30, top});
  f.line({40, top_q}, {40, top});

  f.line({60, 10}, {60, 15});
  f.line({70, 0}, {70, 15});
  const long long top_r = f.band(60, 15, r - 1, +1);
  f.line({60, top_r}, {60, top2}, 1);
  f.line({70, top_r}, {70, top});

  f.line({0, top}, {30, top});
  f.line({40, top}, {70, top});
  f.line({10, top2}, {60, top2});
  f.line({10, 10}, {30, 10});
  f.line({40, 10}, {60, 10});
  f.line({0, 0}, {70, 0});

  const auto right = column(60, yr, 25, -10);
  const auto middle = column(30, 35, yq - 10, 10);
  t.binding = {{10, yq}, {30, yq}, {40, yq}};
  t.binding.insert(t.binding.end(), right.begin(), right.end());
  t.binding.push_back({40, 25});
  t.binding.push_back({30, 25});
  t.binding.insert(t.binding.end(), middle.begin(), middle.end());

  t.axis = {{10, yq}, {30, yq}, {40, yq}, {50, yq}, {50, yr}};
  zigzag(t.axis, right, 53, -5);
  t.axis.push_back({40, 25});
  t.axis.push_back({30, 25});
  t.axis.push_back({21, 27});
  for (const Point& b : middle) {
    t.axis.push_back(b);
    t.axis.push_back({23, b.y + 5});
  }
  if (!middle.empty()) t.axis.back() = {20, yq - 5};
  return t;
}

Template q23_template(int p, int q, int r) {
  Template t;
  Figure& f = t.figure;
  const long long yp = 15 + 10LL * (p - 1);
  const long long yr = 15 + 10LL * (r - 1);
  const long long ym = std::max({yp, yr, 45LL});
  const long long top = ym + 20;
  const long long top2 = top + 10;

  f.line({0, 0}, {0, 15});
  f.line({10, 10}, {10, 15});
  f.band(0, 15, p - 1, -1);
  f.line({0, yp}, {0, top});
  f.line({10, yp}, {10, top2}, 1);

  if (q == 2) {
    f.line({30, 10}, {30, 30});
    f.line({40, 10}, {40, 30});
    f.band(30, 30, 1, +1);
    f.line({30, 40}, {30, ym});
    f.line({40, 40}, {40, ym});
  } else {
    f.line({30, 10}, {30, 15});
    f.line({40, 10}, {40, 15});
    f.band(30, 15, 2, +1);
    f.line({30, 35}, {30, ym});
    f.line({40, 35}, {40, ym});
  }
  f.band(30, ym, 1, +1);
  f.line({30, ym + 10}, {30, top});
  f.line({40, ym + 10}, {40, top});

  f.line({60, 10}, {60, 15});
  f.line({70, 0}, {70, 15});
  f.band(60, 15, r - 1, +1);
  f.line({60, yr}, {60, top2}, 1);
  f.line({70, yr}, {70, top});

  f.line({0, top}, {30, top});
  f.line({40, top}, {70, top});
  f.line({10, top2}, {60, top2});
  f.line({10, 10}, {30, 10});
  f.line({40, 10}, {60, 10});
  f.line({0, 0}, {70, 0});

  const auto left = column(10, 25, yp, 10);
  const auto right_up = column(60, 25, yr, 10);
  const auto right_down = column(60, yr, 25, -10);
  t.binding = left;
  t.binding.insert(t.binding.end(), {{30, ym}, {40, ym}, {30, 25}, {40, 25}});
  t.binding.insert(t.binding.end(), right_up.begin(), right_up.end());

  t.axis = {{10, yp}, {20, yp}, {20, ym}, {30, ym}, {40, ym}, {50, ym}, {50, yr}};
  zigzag(t.axis, right_down, 53, -5);
  t.axis.push_back({40, 25});
  t.axis.push_back({30, 25});
  zigzag(t.axis, left, 17, 5);
  return t;
}

Template q4plus_template(int p, int q, int r) {
  Template t;
  Figure& f = t.figure;
  const int n1 = p - 2;
  const int n2 = q - 2;
  const int n3 = r - 2;
  const long long y1 = 15 + 10LL * n1;
  const long long y2 = 15 + 10LL * n2;
  const long long y3 = 15 + 10LL * n3;
  const long long m = std::max({y1, y2, y3});
  const long long low_inner = m + 4;
  const long long low_outer = m + 6;
  const long long clasp_bottom = m + 10;
  const long long clasp_top = clasp_bottom + 10;
  const long long roof_inner = m + 25;
  const long long roof_outer = m + 30;

  f.line({0, -10}, {0, 15});
  f.line({10, 10}, {10, 15});
  f.band(0, 15, n1, -1);
  f.line({0, y1}, {0, low_outer});
  f.line({10, y1}, {10, low_inner});
  f.line({0, low_outer}, {50, low_outer}, 1);
  f.line({10, low_inner}, {60, low_inner}, 1);

  f.line({30, -10}, {30, -5});
  f.line({40, -10}, {40, -5});
  f.band(30, -5, 1, +1);
  f.line({30, 5}, {30, 15}, 1);
  f.line({40, 5}, {40, 15}, 1);
  f.band(30, 15, n2, +1);
  f.line({30, y2}, {30, clasp_bottom});
  f.line({40, y2}, {40, clasp_bottom});
  f.line({30, clasp_bottom}, {40, clasp_top}, 1);
  f.line({40, clasp_bottom}, {20, roof_outer});
  f.line({20, roof_outer}, {50, roof_outer});
  f.line({50, roof_outer}, {50, low_outer}, 1);
  f.line({40, clasp_top}, {40, roof_inner});
  f.line({40, roof_inner}, {70, roof_inner});

  f.line({60, 10}, {60, 15});
  f.line({70, -10}, {70, 15});
  f.band(60, 15, n3, +1);
  f.line({60, y3}, {60, low_inner});
  f.line({70, y3}, {70, roof_inner});

  f.line({0, -10}, {30, -10});
  f.line({40, -10}, {70, -10});
  f.line({10, 10}, {60, 10});

  const auto left = column(10, 25, y1 - 10, 10);
  const auto middle = column(40, y2 - 10, 25, -10);
  const auto right = column(70, 25, y3 - 10, 10);
  t.binding = {{0, 5}};
  t.binding.insert(t.binding.end(), left.begin(), left.end());
  t.binding.insert(t.binding.end(), {{20, 10}, {20, roof_outer}, {30, 5}, {30, y2 - 10}, {30, clasp_bottom}});
  t.binding.insert(t.binding.end(), middle.begin(), middle.end());
  t.binding.push_back({60, 25});
  t.binding.insert(t.binding.end(), right.begin(), right.end());

  if (!left.empty()) t.axis.push_back({20, y1 - 10});
  t.axis.push_back({20, y2 - 10});
  t.axis.push_back({30, y2 - 10});
  zigzag(t.axis, middle, 47, -5);
  t.axis.push_back({60, 25});
  zigzag(t.axis, right, 77, 5);
  t.axis.insert(t.axis.end(), {{85, right.back().y + 5},
                               {85, m + 40},
                               {50, m + 40},
                               {20, roof_outer},
                               {30, clasp_bottom},
                               {-15, clasp_bottom},
                               {-15, 5},
                               {0, 5},
                               {30, 5},
                               {20, 10}});
  zigzag(t.axis, left, 17, 5);
  return t;
}

GridDiagram realize(const Template& t) {
  const detail::ArcLayout layout = detail::extract_arc_layout(t.figure, t.binding, t.axis);
  GridDiagram g{static_cast<int>(layout.xs.size()), layout.xs, layout.os};
  auto problems = validate(g, true);
  if (!problems.empty()) throw std::logic_error("construction produced an invalid grid: " + problems.front());
  return g;
}

void require_knot(int p, int q, int r) {
  if (!is_knot(PretzelSpec({-p, q, r}))) {
    throw std::invalid_argument("P(-" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) +
                                ") is not a knot");
  }
}

}  // namespace

GridDiagram construct_minus2(int q, int r) {
  if (q < 3 || r < q) throw std::invalid_argument("construct_minus2 needs 3 <= q <= r");
  require_knot(2, q, r);
  return realize(minus2_template(q, r));
}

GridDiagram construct_q23(int p, int q, int r) {
  if (p < 3 || r < 3 || (q != 2 && q != 3)) throw std::invalid_argument("construct_q23 needs p, r >= 3 and q in {2, 3}");
  require_knot(p, q, r);
  return realize(q23_template(p, q, r));
}

GridDiagram construct_q4plus(int p, int q, int r) {
  if (p < 3 || q < 4 || r < q) throw std::invalid_argument("construct_q4plus needs p >= 3, q >= 4 and r >= q");
  require_knot(p, q, r);
  return realize(q4plus_template(p, q, r));
}

GridDiagram construct_family(const FamilySpec& f) {
  if (f.p == 2) return construct_minus2(f.q, f.r);
  if (f.q <= 3) return construct_q23(f.p, f.q, f.r);
  return construct_q4plus(f.p, f.q, f.r);
}

}  // namespace knotarc
