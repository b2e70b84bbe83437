#include "knotarc/bounds.hpp"

#include "knotarc/skein.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace knotarc {

namespace {

struct ReferenceRow {
  int table;
  FamilySpec family;
  const char* dt_name;
  int arc_index;
};

// Published arc indices of the tabulated knots.
const ReferenceRow kReference[] = {
    {1, FamilySpec(2, 3, 3), "8n3", 7},     {1, FamilySpec(2, 3, 5), "10n21", 8},
    {1, FamilySpec(2, 3, 7), "12n242", 9},  {1, FamilySpec(2, 5, 5), "12n725", 10},
    {2, FamilySpec(3, 4, 5), "12n475", 10}, {2, FamilySpec(3, 4, 7), "14n12205", 11},
};

std::string verdict_text(const Verdict& v) {
  std::ostringstream out;
  if (v.exact) {
    out << "exact(" << v.lo << ")";
  } else {
    out << "interval(" << v.lo << "," << v.hi << ")";
  }
  return out.str();
}

nlohmann::json verdict_json(const Verdict& v) {
  nlohmann::json j;
  j["kind"] = v.exact ? "exact" : "interval";
  j["lo"] = v.lo;
  j["hi"] = v.hi;
  return j;
}

}  // namespace

int lower_bound(const FamilySpec& f) { return spread_a(kauffman_F(f.pretzel())) + 2; }

UpperBounds upper_bound(const FamilySpec& f) {
  return UpperBounds{construct_family(f).size, crossing_number(f)};
}

BoundsReport verdict(const FamilySpec& f) {
  const PretzelSpec spec = f.pretzel();
  const Laurent2 F = kauffman_F(spec);
  GridDiagram grid = construct_family(f);
  const int c = crossing_number(f);
  const int spread = spread_a(F);
  const int lower = spread + 2;
  const int upper = std::min(grid.size, c);
  BoundsReport report{f,
                      c,
                      spread,
                      lower,
                      grid.size,
                      c,
                      lower == upper ? Verdict::exactly(upper) : Verdict::interval(lower, upper),
                      grid.size <= c ? "construction" : "crossing number",
                      std::move(grid),
                      summarize(lambda_n(spec))};
  if (lower > upper) throw std::logic_error("lower bound exceeds upper bound for " + to_string(f));
  return report;
}

std::string describe(const Verdict& v, int crossing_number) {
  auto relative = [&](int value) {
    const int diff = crossing_number - value;
    if (diff == 0) return std::string("c(K)");
    return diff > 0 ? "c(K)-" + std::to_string(diff) : "c(K)+" + std::to_string(-diff);
  };
  std::ostringstream out;
  if (v.exact) {
    out << "exact " << v.lo << " = " << relative(v.lo);
  } else {
    out << "interval [" << v.lo << ", " << v.hi << "]";
  }
  return out.str();
}

std::optional<Verdict> theorem_verdict(const FamilySpec& f, int lower) {
  const int c = crossing_number(f);
  if (f.p == 2) return Verdict::interval(lower, c - 1);
  if (f.q == 2 && f.r >= 3) return Verdict::exactly(c);
  if (f.q == 3 && f.p >= 3 && f.r >= 3) return Verdict::exactly(c - 1);
  if (f.q == 4 && f.p >= 5 && f.r >= 5) return Verdict::exactly(c - 2);
  if (f.q == 4 && f.p == 3 && f.r >= 5) return Verdict::interval(c - 3, c - 2);
  return std::nullopt;
}

std::vector<TableRow> make_table(int which) {
  if (which != 1 && which != 2) throw std::invalid_argument("table must be 1 or 2");
  std::vector<TableRow> rows;
  for (const ReferenceRow& ref : kReference) {
    if (ref.table != which) continue;
    const BoundsReport rep = verdict(ref.family);
    TableRow row{to_string(ref.family), ref.dt_name, rep.lower, ref.arc_index,
                 std::min(rep.upper_construction, rep.upper_cminus), rep.verdict, std::nullopt};
    if (which == 2) row.theorem_lower = rep.crossing_number - 3;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string table_tsv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "name\tdt_name\tlower\texternal_arc_index\tupper\tverdict\ttheorem_lower\n";
  for (const TableRow& row : rows) {
    out << row.name << '\t' << row.dt_name.value_or("") << '\t' << row.lower << '\t';
    if (row.external_arc_index) out << *row.external_arc_index;
    out << '\t' << row.upper << '\t' << verdict_text(row.verdict) << '\t';
    if (row.theorem_lower) out << *row.theorem_lower;
    out << '\n';
  }
  return out.str();
}

std::string table_json(const std::vector<TableRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const TableRow& row : rows) {
    nlohmann::ordered_json j;
    j["name"] = row.name;
    j["dt_name"] = row.dt_name ? nlohmann::ordered_json(*row.dt_name) : nlohmann::ordered_json(nullptr);
    j["lower"] = row.lower;
    j["external_arc_index"] =
        row.external_arc_index ? nlohmann::ordered_json(*row.external_arc_index) : nlohmann::ordered_json(nullptr);
    j["upper"] = row.upper;
    j["verdict"] = verdict_json(row.verdict);
    j["theorem_lower"] = row.theorem_lower ? nlohmann::ordered_json(*row.theorem_lower) : nlohmann::ordered_json(nullptr);
    j["external"] = "dt_name and external_arc_index are reference data from published knot tables";
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::vector<SweepItem> sweep(IntRange p, IntRange q, IntRange r, int max_crossings) {
  std::vector<SweepItem> items;
  for (int a = p.lo; a <= p.hi; ++a) {
    for (int b = q.lo; b <= q.hi; ++b) {
      for (int c = r.lo; c <= r.hi; ++c) {
        if (is_family(a, b, c)) items.push_back(SweepItem{a, b, c, std::nullopt, {}});
      }
    }
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      SweepItem& item = items[i];
      if (item.p + item.q + item.r > max_crossings) {
        item.error = "crossing number " + std::to_string(item.p + item.q + item.r) + " exceeds the budget of " +
                     std::to_string(max_crossings);
        continue;
      }
      try {
        item.report = verdict(FamilySpec(item.p, item.q, item.r));
      } catch (const std::exception& e) {
        item.error = e.what();
      }
    }
  };
  const unsigned threads =
      std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(items.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return items;
}

std::string report_json(const BoundsReport& report) {
  nlohmann::ordered_json j;
  j["name"] = to_string(report.family);
  j["p"] = report.family.p;
  j["q"] = report.family.q;
  j["r"] = report.family.r;
  j["crossing_number"] = report.crossing_number;
  j["spread"] = report.spread;
  j["lower"] = report.lower;
  j["upper_construction"] = report.upper_construction;
  j["upper_cminus"] = report.upper_cminus;
  j["verdict"] = verdict_json(report.verdict);
  j["verdict_text"] = describe(report.verdict, report.crossing_number);
  j["upper_source"] = report.upper_source;
  j["grid"] = nlohmann::ordered_json::parse(to_json(report.grid));
  j["summary"] = to_text(report.summary);
  return j.dump();
}

}  // namespace knotarc
