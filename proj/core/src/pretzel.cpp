#include "knotarc/pretzel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace knotarc {

namespace {

// Band endpoints are numbered 4*band + slot.
enum Slot { kTopLeft = 0, kTopRight = 1, kBottomLeft = 2, kBottomRight = 3 };

struct BandGraph {
  std::size_t n;
  std::vector<int> twists;

  int band(int end) const { return end / 4; }
  int slot(int end) const { return end % 4; }
  int end(int band, int slot) const { return 4 * band + slot; }
  bool is_top(int e) const { return slot(e) == kTopLeft || slot(e) == kTopRight; }

  // The closing arc outside the bands.
  int outer(int e) const {
    const int b = band(e);
    const int last = static_cast<int>(n) - 1;
    switch (slot(e)) {
      case kTopRight:
        return b == last ? end(0, kTopLeft) : end(b + 1, kTopLeft);
      case kTopLeft:
        return b == 0 ? end(last, kTopRight) : end(b - 1, kTopRight);
      case kBottomRight:
        return b == last ? end(0, kBottomLeft) : end(b + 1, kBottomLeft);
      default:
        return b == 0 ? end(last, kBottomRight) : end(b - 1, kBottomRight);
    }
  }

  // Strand 0 of a band starts bottom-left, strand 1 starts bottom-right.
  int strand(int e) const {
    const bool odd = std::abs(twists[band(e)]) % 2 == 1;
    switch (slot(e)) {
      case kBottomLeft:
        return 0;
      case kBottomRight:
        return 1;
      case kTopLeft:
        return odd ? 1 : 0;
      default:
        return odd ? 0 : 1;
    }
  }

  int other_end(int e) const {
    const int b = band(e);
    const bool odd = std::abs(twists[b]) % 2 == 1;
    switch (slot(e)) {
      case kBottomLeft:
        return end(b, odd ? kTopRight : kTopLeft);
      case kBottomRight:
        return end(b, odd ? kTopLeft : kTopRight);
      case kTopLeft:
        return end(b, odd ? kBottomRight : kBottomLeft);
      default:
        return end(b, odd ? kBottomLeft : kBottomRight);
    }
  }
};

struct Trace {
  std::vector<int> direction;  // per strand 2*band + s: +1 upward, -1 downward
  int components = 0;
};

Trace trace(const PretzelSpec& spec) {
  BandGraph g{spec.size(), spec.twists()};
  Trace t;
  t.direction.assign(2 * g.n, 0);
  for (int start = 0; start < static_cast<int>(4 * g.n); ++start) {
    const int first = 2 * g.band(start) + g.strand(start);
    if (t.direction[first] != 0) continue;
    ++t.components;
    t.direction[first] = g.is_top(start) ? 1 : -1;
    int pos = start;
    while (true) {
      const int e = g.outer(pos);
      const int s = 2 * g.band(e) + g.strand(e);
      if (t.direction[s] != 0) break;
      t.direction[s] = g.is_top(e) ? -1 : 1;
      pos = g.other_end(e);
    }
  }
  return t;
}

void skip_spaces(std::string_view text, std::size_t& i) {
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
}

[[noreturn]] void parse_error(std::string_view text, std::size_t at, const std::string& what) {
  std::ostringstream msg;
  msg << "cannot parse pretzel notation '" << text << "' at offset " << at << ": " << what;
  throw std::invalid_argument(msg.str());
}

}  // namespace

PretzelSpec::PretzelSpec(std::vector<int> twists) : twists_(std::move(twists)) {
  if (twists_.empty()) throw std::invalid_argument("a pretzel spec needs at least one band");
  if (std::find(twists_.begin(), twists_.end(), 0) != twists_.end()) {
    throw std::invalid_argument("pretzel twists must be nonzero");
  }
}

bool is_family(int p, int q, int r) {
  if (p < 2 || q < 2 || r < 2 || r < q) return false;
  const int evens = (p % 2 == 0) + (q % 2 == 0) + (r % 2 == 0);
  return evens <= 1;
}

FamilySpec::FamilySpec(int p_, int q_, int r_) : p(p_), q(q_), r(r_) {
  if (p < 2 || q < 2 || r < 2) throw std::invalid_argument("family parameters must be at least 2");
  if (r < q) throw std::invalid_argument("family parameters must satisfy r >= q");
  if (!is_family(p, q, r)) throw std::invalid_argument("P(-p,q,r) is not a knot: two or more even parameters");
}

PretzelSpec FamilySpec::pretzel() const { return PretzelSpec({-p, q, r}); }

bool is_knot(const PretzelSpec& spec) {
  if (spec.size() != 3) throw std::invalid_argument("is_knot expects exactly three bands");
  const auto& t = spec.twists();
  return std::count_if(t.begin(), t.end(), [](int v) { return v % 2 == 0; }) <= 1;
}

int crossing_number(const FamilySpec& f) { return f.p + f.q + f.r; }

int component_count(const PretzelSpec& spec) { return trace(spec).components; }

int standard_writhe(const PretzelSpec& spec) {
  const Trace t = trace(spec);
  int w = 0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    w += spec.twists()[i] * t.direction[2 * i] * t.direction[2 * i + 1];
  }
  return w;
}

PretzelSpec mirror(const PretzelSpec& spec) {
  std::vector<int> t = spec.twists();
  for (int& v : t) v = -v;
  return PretzelSpec(std::move(t));
}

std::vector<PretzelSpec> permutations(const FamilySpec& f) {
  std::vector<int> t{-f.p, f.q, f.r};
  std::sort(t.begin(), t.end());
  std::vector<PretzelSpec> out;
  do {
    out.emplace_back(t);
  } while (std::next_permutation(t.begin(), t.end()));
  return out;
}

PretzelSpec parse_pretzel(std::string_view text) {
  std::size_t i = 0;
  skip_spaces(text, i);
  if (i >= text.size() || text[i] != 'P') parse_error(text, i, "expected 'P'");
  ++i;
  skip_spaces(text, i);
  if (i >= text.size() || text[i] != '(') parse_error(text, i, "expected '('");
  ++i;
  std::vector<int> twists;
  while (true) {
    skip_spaces(text, i);
    int value = 0;
    const char* begin = text.data() + i;
    const char* stop = text.data() + text.size();
    if (begin < stop && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, stop, value);
    if (ec != std::errc() || ptr == begin) parse_error(text, i, "expected an integer");
    i = static_cast<std::size_t>(ptr - text.data());
    if (value == 0) parse_error(text, i, "twists must be nonzero");
    twists.push_back(value);
    skip_spaces(text, i);
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == ')') {
      ++i;
      break;
    }
    parse_error(text, i, "expected ',' or ')'");
  }
  skip_spaces(text, i);
  if (i != text.size()) parse_error(text, i, "trailing characters");
  return PretzelSpec(std::move(twists));
}

std::string to_string(const PretzelSpec& spec) {
  std::ostringstream out;
  out << "P(";
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (i) out << ',';
    out << spec.twists()[i];
  }
  out << ')';
  return out.str();
}

std::string to_string(const FamilySpec& f) { return to_string(f.pretzel()); }

}  // namespace knotarc
