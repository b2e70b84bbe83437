#include "knotarc/grid.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace knotarc {

namespace {

int sgn(int v) { return (v > 0) - (v < 0); }

bool structurally_valid(const GridDiagram& g) { return validate(g, false).empty(); }

// Column of the X and of the O in every row.
struct RowIndex {
  std::vector<int> x_col;
  std::vector<int> o_col;
};

RowIndex index_rows(const GridDiagram& g) {
  RowIndex idx{std::vector<int>(g.size), std::vector<int>(g.size)};
  for (int c = 0; c < g.size; ++c) {
    idx.x_col[g.xs[c]] = c;
    idx.o_col[g.os[c]] = c;
  }
  return idx;
}

bool strictly_between(int v, int a, int b) { return std::min(a, b) < v && v < std::max(a, b); }

// A crossing sits where column c passes strictly across row r.
bool is_crossing(const GridDiagram& g, const RowIndex& idx, int c, int r) {
  return strictly_between(r, g.xs[c], g.os[c]) && strictly_between(c, idx.x_col[r], idx.o_col[r]);
}

std::vector<int> read_rows(std::istringstream& line, int size, const std::string& label) {
  std::vector<int> rows;
  int v = 0;
  while (line >> v) {
    if (v < 1 || v > size) throw std::invalid_argument(label + " row " + std::to_string(v) + " is outside 1.." + std::to_string(size));
    rows.push_back(v - 1);
  }
  if (!line.eof()) throw std::invalid_argument(label + " list holds a non-integer token");
  if (static_cast<int>(rows.size()) != size) throw std::invalid_argument(label + " list does not have " + std::to_string(size) + " entries");
  return rows;
}

}  // namespace

int PlanarDiagram::writhe() const {
  return std::accumulate(crossings.begin(), crossings.end(), 0, [](int acc, const Crossing& c) { return acc + c.sign; });
}

int PlanarDiagram::edge_count() const { return 2 * static_cast<int>(crossings.size()); }

std::vector<std::string> validate(const GridDiagram& g, bool expect_knot) {
  std::vector<std::string> problems;
  if (g.size < 1) problems.push_back("size must be positive");
  if (static_cast<int>(g.xs.size()) != g.size || static_cast<int>(g.os.size()) != g.size) {
    problems.push_back("size mismatch: expected " + std::to_string(g.size) + " columns");
    return problems;
  }
  auto check_rows = [&](const std::vector<int>& rows, const char* label) {
    std::vector<int> seen(g.size, 0);
    for (int c = 0; c < g.size; ++c) {
      const int r = rows[c];
      if (r < 0 || r >= g.size) {
        problems.push_back(std::string("row out of range: ") + label + " in column " + std::to_string(c + 1));
        continue;
      }
      if (++seen[r] == 2) problems.push_back(std::string("duplicate row: ") + label + " row " + std::to_string(r + 1));
    }
  };
  check_rows(g.xs, "X");
  check_rows(g.os, "O");
  for (int c = 0; c < g.size; ++c) {
    if (g.xs[c] == g.os[c]) problems.push_back("X and O share a cell: column " + std::to_string(c + 1));
  }
  if (problems.empty() && expect_knot) {
    const int n = component_count(g);
    if (n != 1) problems.push_back("not a knot: " + std::to_string(n) + " components");
  }
  return problems;
}

int component_count(const GridDiagram& g) {
  if (!structurally_valid(g)) throw std::invalid_argument("component_count needs a valid grid");
  const RowIndex idx = index_rows(g);
  std::vector<bool> seen(g.size, false);
  int components = 0;
  for (int start = 0; start < g.size; ++start) {
    if (seen[start]) continue;
    ++components;
    for (int c = start; !seen[c]; c = idx.x_col[g.os[c]]) seen[c] = true;
  }
  return components;
}

PlanarDiagram to_planar(const GridDiagram& g) {
  if (!structurally_valid(g)) throw std::invalid_argument("to_planar needs a valid grid");
  const RowIndex idx = index_rows(g);
  const int k = g.size;

  // Crossing ids by cell, then the ordered visits along every component.
  std::vector<int> cell(static_cast<std::size_t>(k) * k, -1);
  int count = 0;
  for (int c = 0; c < k; ++c) {
    for (int r = 0; r < k; ++r) {
      if (is_crossing(g, idx, c, r)) cell[static_cast<std::size_t>(c) * k + r] = count++;
    }
  }

  struct Visit {
    int in = -1;
    int out = -1;
    int dir = 0;
  };
  std::vector<Visit> over(count);
  std::vector<Visit> under(count);

  PlanarDiagram d;
  std::vector<bool> seen(k, false);
  int next_label = 0;
  for (int start = 0; start < k; ++start) {
    if (seen[start]) continue;
    ++d.components;
    struct Event {
      int id;
      bool is_over;
      int dir;
    };
    std::vector<Event> events;
    for (int c = start; !seen[c]; c = idx.x_col[g.os[c]]) {
      seen[c] = true;
      const int dv = sgn(g.os[c] - g.xs[c]);
      for (int r = g.xs[c] + dv; r != g.os[c]; r += dv) {
        const int id = cell[static_cast<std::size_t>(c) * k + r];
        if (id >= 0) events.push_back({id, true, dv});
      }
      const int row = g.os[c];
      const int next = idx.x_col[row];
      const int dh = sgn(next - c);
      for (int cc = c + dh; cc != next; cc += dh) {
        const int id = cell[static_cast<std::size_t>(cc) * k + row];
        if (id >= 0) events.push_back({id, false, dh});
      }
    }
    if (events.empty()) {
      ++d.free_loops;
      continue;
    }
    const int n = static_cast<int>(events.size());
    for (int i = 0; i < n; ++i) {
      Visit& v = events[i].is_over ? over[events[i].id] : under[events[i].id];
      v.in = next_label + i;
      v.out = next_label + (i + 1) % n;
      v.dir = events[i].dir;
    }
    next_label += n;
  }

  d.crossings.reserve(count);
  for (int id = 0; id < count; ++id) {
    // Over is vertical with direction (0, dv), under horizontal with (dh, 0);
    // the sign is that of the cross product over x under.
    const int sign = -over[id].dir * under[id].dir;
    Crossing x{};
    x.sign = sign;
    x.edges[0] = under[id].in;
    x.edges[2] = under[id].out;
    if (sign > 0) {
      x.edges[1] = over[id].out;
      x.edges[3] = over[id].in;
    } else {
      x.edges[1] = over[id].in;
      x.edges[3] = over[id].out;
    }
    d.crossings.push_back(x);
  }
  return d;
}

int grid_writhe(const GridDiagram& g) {
  if (!structurally_valid(g)) throw std::invalid_argument("grid_writhe needs a valid grid");
  if (component_count(g) != 1) throw std::invalid_argument("grid_writhe needs a single-component grid");
  return to_planar(g).writhe();
}

GridDiagram mirror(const GridDiagram& g) {
  GridDiagram m = g;
  std::reverse(m.xs.begin(), m.xs.end());
  std::reverse(m.os.begin(), m.os.end());
  return m;
}

GridDiagram translate_columns(const GridDiagram& g, int shift) {
  GridDiagram t = g;
  if (g.size == 0) return t;
  const int s = ((shift % g.size) + g.size) % g.size;
  for (int c = 0; c < g.size; ++c) {
    t.xs[(c + s) % g.size] = g.xs[c];
    t.os[(c + s) % g.size] = g.os[c];
  }
  return t;
}

std::string render_ascii(const GridDiagram& g) {
  if (!structurally_valid(g)) throw std::invalid_argument("render_ascii needs a valid grid");
  const RowIndex idx = index_rows(g);
  std::ostringstream out;
  for (int r = g.size - 1; r >= 0; --r) {
    const int lo = std::min(idx.x_col[r], idx.o_col[r]);
    const int hi = std::max(idx.x_col[r], idx.o_col[r]);
    for (int c = 0; c < g.size; ++c) {
      char glyph = ' ';
      if (g.xs[c] == r) {
        glyph = 'X';
      } else if (g.os[c] == r) {
        glyph = 'O';
      } else if (strictly_between(r, g.xs[c], g.os[c])) {
        glyph = '|';
      } else if (lo < c && c < hi) {
        glyph = '-';
      }
      out << glyph;
      if (c + 1 < g.size) out << ((lo <= c && c < hi) ? '-' : ' ');
    }
    out << '\n';
  }
  return out.str();
}

std::string to_text(const GridDiagram& g) {
  std::ostringstream out;
  out << "grid " << g.size << "\nX:";
  for (int r : g.xs) out << ' ' << r + 1;
  out << "\nO:";
  for (int r : g.os) out << ' ' << r + 1;
  out << '\n';
  return out.str();
}

GridDiagram parse_grid_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto next_line = [&]() -> std::string {
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
    }
    throw std::invalid_argument("grid text ends early");
  };
  std::istringstream header(next_line());
  std::string word;
  GridDiagram g;
  if (!(header >> word >> g.size) || word != "grid" || g.size < 1) {
    throw std::invalid_argument("grid text must start with 'grid <k>'");
  }
  header >> std::ws;
  if (!header.eof()) throw std::invalid_argument("unexpected text after the grid size");
  for (const char* label : {"X:", "O:"}) {
    std::istringstream rows(next_line());
    if (!(rows >> word) || word != label) throw std::invalid_argument(std::string("expected a line starting with ") + label);
    (label[0] == 'X' ? g.xs : g.os) = read_rows(rows, g.size, label[0] == 'X' ? "X" : "O");
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) throw std::invalid_argument("unexpected text after the O line");
  }
  return g;
}

std::string to_json(const GridDiagram& g) {
  nlohmann::json j;
  j["size"] = g.size;
  std::vector<int> xs;
  std::vector<int> os;
  for (int r : g.xs) xs.push_back(r + 1);
  for (int r : g.os) os.push_back(r + 1);
  j["xs"] = xs;
  j["os"] = os;
  return j.dump();
}

GridDiagram parse_grid_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed grid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("size") || !j.contains("xs") || !j.contains("os")) {
    throw std::invalid_argument("grid JSON needs size, xs and os");
  }
  GridDiagram g;
  try {
    g.size = j.at("size").get<int>();
    for (const char* key : {"xs", "os"}) {
      std::vector<int> rows = j.at(key).get<std::vector<int>>();
      if (static_cast<int>(rows.size()) != g.size) throw std::invalid_argument(std::string(key) + " has the wrong length");
      for (int& r : rows) {
        if (r < 1 || r > g.size) throw std::invalid_argument(std::string(key) + " holds a row outside 1..size");
        --r;
      }
      (key[0] == 'x' ? g.xs : g.os) = std::move(rows);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("grid JSON has the wrong types: ") + e.what());
  }
  return g;
}

}  // namespace knotarc
