#include <knotarc/bracket.hpp>
#include <knotarc/grid.hpp>
#include <knotarc/skein.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

using namespace knotarc;

namespace {

const GridDiagram kUnknot{2, {0, 1}, {1, 0}};
const GridDiagram kTrefoil{5, {1, 2, 3, 4, 0}, {3, 4, 0, 1, 2}};
const GridDiagram kHopf{4, {0, 1, 2, 3}, {2, 3, 0, 1}};

bool contains(const std::vector<std::string>& problems, const std::string& needle) {
  return std::any_of(problems.begin(), problems.end(),
                     [&](const std::string& p) { return p.find(needle) != std::string::npos; });
}

// Adds a column right of c and a row above the X of column c, keeping the knot type.
GridDiagram stabilize(const GridDiagram& g, int c) {
  const int r = g.xs[c];
  auto up = [r](int v) { return v > r ? v + 1 : v; };
  GridDiagram s{g.size + 1, {}, {}};
  for (int j = 0; j < g.size; ++j) {
    if (j == c) {
      s.xs.push_back(r + 1);
      s.os.push_back(up(g.os[c]));
      s.xs.push_back(r);
      s.os.push_back(r + 1);
    } else {
      s.xs.push_back(up(g.xs[j]));
      s.os.push_back(up(g.os[j]));
    }
  }
  return s;
}

// Interior intersections of column segments with row segments, found by
// scanning every cell.
int brute_force_crossings(const GridDiagram& g) {
  int count = 0;
  for (int c = 0; c < g.size; ++c) {
    for (int r = 0; r < g.size; ++r) {
      const int x = static_cast<int>(std::find(g.xs.begin(), g.xs.end(), r) - g.xs.begin());
      const int o = static_cast<int>(std::find(g.os.begin(), g.os.end(), r) - g.os.begin());
      const bool vertical = std::min(g.xs[c], g.os[c]) < r && r < std::max(g.xs[c], g.os[c]);
      const bool horizontal = std::min(x, o) < c && c < std::max(x, o);
      if (vertical && horizontal) ++count;
    }
  }
  return count;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Grid, ValidTrefoil) {
  EXPECT_TRUE(validate(kTrefoil, true).empty());
  EXPECT_EQ(component_count(kTrefoil), 1);
  // Three essential crossings and one curl, all of the same sign.
  EXPECT_EQ(to_planar(kTrefoil).crossings.size(), 4u);
  EXPECT_EQ(grid_writhe(kTrefoil), -4);
}

TEST(Grid, CrossingCountMatchesBruteForce) {
  for (const GridDiagram& g : {kTrefoil, kHopf, construct_minus2(3, 5), construct_q23(4, 3, 5), construct_q4plus(3, 4, 7)}) {
    EXPECT_EQ(static_cast<int>(to_planar(g).crossings.size()), brute_force_crossings(g));
  }
}

TEST(Grid, Violations) {
  GridDiagram shared = kTrefoil;
  shared.os[0] = shared.xs[0];
  EXPECT_TRUE(contains(validate(shared), "X and O share a cell"));

  GridDiagram dup = kTrefoil;
  dup.xs[1] = dup.xs[0];
  EXPECT_TRUE(contains(validate(dup), "duplicate row"));

  GridDiagram range = kTrefoil;
  range.os[2] = 9;
  EXPECT_TRUE(contains(validate(range), "row out of range"));

  GridDiagram shortened = kTrefoil;
  shortened.xs.pop_back();
  EXPECT_TRUE(contains(validate(shortened), "size mismatch"));

  EXPECT_TRUE(validate(kHopf).empty());
  EXPECT_EQ(component_count(kHopf), 2);
  EXPECT_TRUE(contains(validate(kHopf, true), "not a knot: 2 components"));
  EXPECT_THROW(grid_writhe(kHopf), std::invalid_argument);
}

TEST(Grid, Unknot) {
  EXPECT_TRUE(validate(kUnknot, true).empty());
  EXPECT_EQ(to_planar(kUnknot).crossings.size(), 0u);
  EXPECT_EQ(grid_writhe(kUnknot), 0);
  EXPECT_EQ(render_ascii(kUnknot), "O-X\nX-O\n");
}

TEST(Grid, ConstructionSizes) {
  for (int q = 3; q <= 9; q += 2)
    for (int r = q; r <= 9; r += 2) {
      const GridDiagram g = construct_minus2(q, r);
      EXPECT_EQ(g.size, q + r + 1);
      EXPECT_TRUE(validate(g, true).empty());
    }
  for (int q : {2, 3})
    for (int p = 3; p <= 9; ++p)
      for (int r = 3; r <= 9; ++r) {
        if (!is_family(p, q, r)) continue;
        const GridDiagram g = construct_q23(p, q, r);
        EXPECT_EQ(g.size, p + r + 2);
        EXPECT_TRUE(validate(g, true).empty());
      }
  for (int p = 3; p <= 12; ++p)
    for (int q = 4; q <= 12; ++q)
      for (int r = q; p + q + r <= 20; ++r) {
        if (!is_family(p, q, r)) continue;
        const GridDiagram g = construct_q4plus(p, q, r);
        EXPECT_EQ(g.size, p + q + r - 2);
        EXPECT_TRUE(validate(g, true).empty());
      }
}

TEST(Grid, ConstructorExamples) {
  EXPECT_EQ(construct_minus2(3, 3).size, 7);
  EXPECT_EQ(construct_minus2(5, 5).size, 11);
  EXPECT_EQ(construct_q23(3, 2, 3).size, 8);
  EXPECT_EQ(construct_q23(3, 3, 3).size, 8);
  EXPECT_EQ(construct_q4plus(5, 4, 5).size, 12);
  EXPECT_EQ(construct_q4plus(3, 4, 7).size, 12);
  EXPECT_EQ(construct_family(FamilySpec(3, 4, 5)).size, 10);
}

TEST(Grid, ConstructorsRejectBadParameters) {
  EXPECT_THROW(construct_minus2(3, 4), std::invalid_argument);
  EXPECT_THROW(construct_minus2(5, 3), std::invalid_argument);
  EXPECT_THROW(construct_q23(2, 3, 3), std::invalid_argument);
  EXPECT_THROW(construct_q23(4, 2, 4), std::invalid_argument);
  EXPECT_THROW(construct_q4plus(3, 4, 6), std::invalid_argument);
  EXPECT_THROW(construct_q4plus(3, 5, 4), std::invalid_argument);
}

TEST(Grid, ConstructionsCarryThePretzelKnot) {
  for (const FamilySpec& f : {FamilySpec(2, 3, 3), FamilySpec(2, 3, 5), FamilySpec(3, 2, 3), FamilySpec(5, 3, 3),
                              FamilySpec(3, 4, 5), FamilySpec(3, 3, 3)}) {
    EXPECT_EQ(jones(construct_family(f)), jones_from_F(kauffman_F(f.pretzel()))) << to_string(f);
  }
}

TEST(Grid, CyclicTranslationPreservesTheKnot) {
  for (const GridDiagram& g : {kTrefoil, construct_q23(3, 2, 3), construct_minus2(3, 3)}) {
    const Laurent1 J = jones(g);
    for (int shift = 1; shift < g.size; ++shift) {
      const GridDiagram t = translate_columns(g, shift);
      EXPECT_TRUE(validate(t, true).empty());
      EXPECT_EQ(component_count(t), 1);
      EXPECT_EQ(jones(t), J) << shift;
    }
  }
}

TEST(Grid, MirrorNegatesWrithe) {
  for (const GridDiagram& g : {kTrefoil, construct_q23(3, 3, 3), construct_q4plus(3, 4, 5)}) {
    const GridDiagram m = mirror(g);
    EXPECT_TRUE(validate(m, true).empty());
    EXPECT_EQ(grid_writhe(m), -grid_writhe(g));
    EXPECT_EQ(jones(m), jones(g).invert_variable());
  }
}

TEST(Grid, StabilizationPreservesTheKnot) {
  for (const GridDiagram& g : {kTrefoil, construct_minus2(3, 3)}) {
    const Laurent1 J = jones(g);
    for (int c = 0; c < g.size; ++c) {
      const GridDiagram s = stabilize(g, c);
      ASSERT_TRUE(validate(s, true).empty()) << c;
      EXPECT_EQ(jones(s), J) << c;
    }
  }
}

TEST(Grid, RenderHasOneXAndOnePerLine) {
  const std::string art = render_ascii(construct_q4plus(3, 4, 7));
  std::istringstream in(art);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), 'X'), 1);
    EXPECT_EQ(std::count(line.begin(), line.end(), 'O'), 1);
    ++lines;
  }
  EXPECT_EQ(lines, 12);
}

TEST(Grid, GoldenMinusTwo) {
  const GridDiagram g = construct_minus2(3, 3);
  EXPECT_EQ(to_text(g) + render_ascii(g), read_file(std::string(KNOTARC_GOLDEN_DIR) + "/minus2_3_3.txt"));
}

TEST(Grid, TextRoundTrip) {
  EXPECT_EQ(to_text(kTrefoil), "grid 5\nX: 2 3 4 5 1\nO: 4 5 1 2 3\n");
  EXPECT_EQ(parse_grid_text(to_text(kTrefoil)), kTrefoil);
  EXPECT_EQ(parse_grid_text("\ngrid 2\n X: 1 2\nO: 2 1\n\n"), kUnknot);
  for (const char* bad : {"", "grid\n", "grid 2\nX: 1 2\n", "grid 2\nX: 1\nO: 2 1\n", "grid 2\nX: 1 3\nO: 2 1\n",
                          "grid 2\nO: 2 1\nX: 1 2\n", "grid 2\nX: 1 2\nO: 2 1\nextra\n", "grid 2 x\nX: 1 2\nO: 2 1\n"}) {
    EXPECT_THROW(parse_grid_text(bad), std::invalid_argument) << bad;
  }
}

TEST(Grid, JsonRoundTrip) {
  EXPECT_EQ(to_json(kTrefoil), R"({"os":[4,5,1,2,3],"size":5,"xs":[2,3,4,5,1]})");
  EXPECT_EQ(parse_grid_json(to_json(kTrefoil)), kTrefoil);
  const GridDiagram big = construct_q4plus(3, 4, 7);
  EXPECT_EQ(parse_grid_json(to_json(big)), big);
  for (const char* bad : {"{", "[]", R"({"size":2,"xs":[1,2]})", R"({"size":2,"xs":[1,2],"os":[2]})",
                          R"({"size":2,"xs":[1,3],"os":[2,1]})", R"({"size":"2","xs":[1,2],"os":[2,1]})"}) {
    EXPECT_THROW(parse_grid_json(bad), std::invalid_argument) << bad;
  }
}
