#include <knotarc/bounds.hpp>
#include <knotarc/bracket.hpp>
#include <knotarc/grid.hpp>
#include <knotarc/laurent.hpp>
#include <knotarc/pretzel.hpp>
#include <knotarc/skein.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace knotarc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;
constexpr int kExitInternal = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::ordered_json coeff_json(const BigInt& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(c);
  }
  return c.str();
}

nlohmann::ordered_json summary_json(const PolySummary& s) {
  nlohmann::ordered_json j;
  j["max_a"] = s.max_a;
  j["top_coeff"] = coeff_json(s.top_coeff);
  j["top_zpow"] = s.top_zpow;
  j["min_a"] = s.min_a;
  j["bot_coeff"] = coeff_json(s.bot_coeff);
  j["bot_zpow"] = s.bot_zpow;
  return j;
}

int cmd_poly(const std::string& text, const std::string& format) {
  PretzelSpec spec = [&] {
    try {
      return parse_pretzel(text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const Laurent2 lambda = lambda_n(spec);
  const int w = standard_writhe(spec);
  const Laurent2 F = mono_mul(lambda, 1, -w, 0);
  const int spread = spread_a(F);
  const PolySummary summary = summarize(lambda);

  if (format == "json") {
    nlohmann::ordered_json j;
    j["spec"] = to_string(spec);
    j["lambda"] = nlohmann::ordered_json::parse(to_json(lambda));
    j["F"] = nlohmann::ordered_json::parse(to_json(F));
    j["writhe"] = w;
    j["spread"] = spread;
    j["summary"] = summary_json(summary);
    j["extended"] = is_extended(spec);
    std::cout << j.dump() << '\n';
    return kExitOk;
  }
  if (format != "text") throw UsageError("poly supports --format text or json");
  std::cout << "spec: " << to_string(spec) << '\n'
            << "Lambda: " << to_text(lambda) << '\n'
            << "F: " << to_text(F) << '\n'
            << "writhe: " << w << '\n'
            << "spread: " << spread << '\n'
            << "summary: " << to_text(summary) << '\n';
  if (is_extended(spec)) std::cout << "note: extended (more than three bands)\n";
  return kExitOk;
}

FamilySpec family_or_usage(int p, int q, int r) {
  try {
    return FamilySpec(p, q, r);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_grid(int p, int q, int r, const std::string& format, bool verify, int max_crossings) {
  const FamilySpec f = family_or_usage(p, q, r);
  const GridDiagram g = construct_family(f);
  const auto problems = validate(g, true);
  const int c = crossing_number(f);

  std::string oracle = "SKIPPED";
  std::optional<Laurent1> grid_jones;
  std::optional<Laurent1> skein_jones;
  if (problems.empty() && verify && c <= max_crossings) {
    grid_jones = jones(g);
    skein_jones = jones_from_F(kauffman_F(f.pretzel()));
    oracle = *grid_jones == *skein_jones ? "PASS" : "FAIL";
  }
  const bool ok = problems.empty() && oracle != "FAIL";

  if (format == "json") {
    nlohmann::ordered_json j;
    j["name"] = to_string(f);
    j["grid"] = nlohmann::ordered_json::parse(to_json(g));
    j["valid"] = problems.empty();
    j["violations"] = problems;
    j["oracle"] = oracle;
    if (grid_jones) j["jones"] = nlohmann::ordered_json::parse(to_json(*grid_jones));
    std::cout << j.dump() << '\n';
  } else if (format == "text") {
    std::cout << to_text(g) << '\n' << render_ascii(g) << '\n';
    std::cout << "knot: " << to_string(f) << '\n' << "size: " << g.size << '\n';
    std::cout << "validate: " << (problems.empty() ? "ok" : problems.front()) << '\n';
    std::cout << "oracle: " << oracle;
    if (grid_jones) std::cout << " (jones " << to_text(*grid_jones) << ")";
    std::cout << '\n';
  } else {
    throw UsageError("grid supports --format text or json");
  }
  return ok ? kExitOk : kExitVerify;
}

int cmd_grid_file(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  GridDiagram g;
  try {
    const auto first = text.find_first_not_of(" \t\r\n");
    g = (first != std::string::npos && text[first] == '{') ? parse_grid_json(text) : parse_grid_text(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto problems = validate(g);
  if (!problems.empty()) {
    std::cerr << "invalid grid: " << problems.front() << '\n';
    return kExitVerify;
  }
  const int components = component_count(g);
  std::optional<Laurent1> v;
  std::optional<int> w;
  if (components == 1) {
    v = jones(g);
    w = grid_writhe(g);
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["grid"] = nlohmann::ordered_json::parse(to_json(g));
    j["components"] = components;
    j["writhe"] = w ? nlohmann::ordered_json(*w) : nlohmann::ordered_json(nullptr);
    j["jones"] = v ? nlohmann::ordered_json::parse(to_json(*v)) : nlohmann::ordered_json(nullptr);
    std::cout << j.dump() << '\n';
    return kExitOk;
  }
  if (format != "text") throw UsageError("grid supports --format text or json");
  std::cout << to_text(g) << '\n' << render_ascii(g) << '\n' << "components: " << components << '\n';
  if (v) std::cout << "writhe: " << *w << '\n' << "jones: " << to_text(*v) << '\n';
  return kExitOk;
}

IntRange parse_range(const std::string& text, const char* flag) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError(std::string("invalid value for ") + flag + ": '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return IntRange{v, v};
  }
  IntRange range{to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
  if (range.lo > range.hi) throw UsageError(std::string("empty range for ") + flag);
  return range;
}

int cmd_table(int which, const std::string& format) {
  if (which != 1 && which != 2) throw UsageError("--table must be 1 or 2");
  const auto rows = make_table(which);
  if (format == "tsv") {
    std::cout << table_tsv(rows);
  } else if (format == "json") {
    std::cout << table_json(rows);
  } else {
    for (const TableRow& row : rows) {
      std::cout << row.name << "  " << row.dt_name.value_or("-") << "  lower " << row.lower;
      if (row.theorem_lower) std::cout << "  c-3 " << *row.theorem_lower;
      std::cout << "  upper " << row.upper << "  arc index " << row.external_arc_index.value_or(0)
                << " (external)" << '\n';
    }
  }
  return kExitOk;
}

int cmd_bounds(const std::string& p_text, const std::string& q_text, const std::string& r_text,
               const std::string& format, int max_crossings) {
  if (p_text.empty() || q_text.empty() || r_text.empty()) throw UsageError("bounds needs -p, -q and -r, or --table");
  const IntRange p = parse_range(p_text, "-p");
  const IntRange q = parse_range(q_text, "-q");
  const IntRange r = parse_range(r_text, "-r");
  const bool single = p.lo == p.hi && q.lo == q.hi && r.lo == r.hi;
  if (single) family_or_usage(p.lo, q.lo, r.lo);

  const auto items = sweep(p, q, r, max_crossings);
  if (items.empty()) throw UsageError("no knots P(-p,q,r) in the given ranges");

  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SweepItem& item : items) {
      if (item.report) {
        arr.push_back(nlohmann::ordered_json::parse(report_json(*item.report)));
      } else {
        arr.push_back({{"p", item.p}, {"q", item.q}, {"r", item.r}, {"error", item.error}});
      }
    }
    std::cout << (single ? arr.front().dump() : arr.dump()) << '\n';
  } else if (format == "tsv") {
    std::cout << "name\tdt_name\tlower\texternal_arc_index\tupper\tverdict\n";
    for (const SweepItem& item : items) {
      if (!item.report) {
        std::cout << "P(-" << item.p << ',' << item.q << ',' << item.r << ")\t\t\t\t\terror: " << item.error << '\n';
        continue;
      }
      const BoundsReport& rep = *item.report;
      std::cout << to_string(rep.family) << "\t\t" << rep.lower << "\t\t"
                << std::min(rep.upper_construction, rep.upper_cminus) << '\t'
                << describe(rep.verdict, rep.crossing_number) << '\n';
    }
  } else if (format == "text") {
    for (const SweepItem& item : items) {
      if (!item.report) {
        std::cout << "P(-" << item.p << ',' << item.q << ',' << item.r << "): error: " << item.error << '\n';
        continue;
      }
      const BoundsReport& rep = *item.report;
      std::cout << to_string(rep.family) << ": c(K) " << rep.crossing_number << ", lower " << rep.lower
                << ", upper " << std::min(rep.upper_construction, rep.upper_cminus) << " (" << rep.upper_source
                << "), " << describe(rep.verdict, rep.crossing_number) << '\n';
    }
  } else {
    throw UsageError("bounds supports --format text, json or tsv");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kauffman polynomials, arc presentations and arc-index bounds of pretzel knots"};
  app.require_subcommand(1);

  std::string format = "text";
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "tsv"}));
  };

  auto* poly = app.add_subcommand("poly", "Lambda, F, spread and summary of a pretzel diagram");
  std::string spec_text;
  poly->add_option("spec", spec_text, "Pretzel notation such as P(-2,3,3)")->required();
  add_format(poly);

  auto* grid = app.add_subcommand("grid", "Arc presentation of P(-p,q,r), or analysis of a grid file");
  int gp = 0;
  int gq = 0;
  int gr = 0;
  bool no_verify = false;
  int grid_max = 16;
  std::string grid_file;
  auto* gp_opt = grid->add_option("-p", gp, "p in P(-p,q,r)");
  auto* gq_opt = grid->add_option("-q", gq, "q in P(-p,q,r)");
  auto* gr_opt = grid->add_option("-r", gr, "r in P(-p,q,r)");
  auto* file_opt = grid->add_option("--input", grid_file, "Read a grid in text or JSON form instead");
  file_opt->excludes(gp_opt)->excludes(gq_opt)->excludes(gr_opt);
  grid->add_flag("--no-verify", no_verify, "Skip the Jones cross-check");
  grid->add_option("--max-crossings", grid_max, "Largest c(K) that is cross-checked")->check(CLI::NonNegativeNumber);
  add_format(grid);

  auto* bounds = app.add_subcommand("bounds", "Arc-index bounds and verdicts");
  std::string bp;
  std::string bq;
  std::string br;
  int table = 0;
  int bounds_max = 30;
  bounds->add_option("-p", bp, "p or a range lo..hi");
  bounds->add_option("-q", bq, "q or a range lo..hi");
  bounds->add_option("-r", br, "r or a range lo..hi");
  bounds->add_option("--table", table, "Reproduce table 1 or 2");
  bounds->add_option("--max-crossings", bounds_max, "Per-item crossing budget for sweeps")->check(CLI::PositiveNumber);
  add_format(bounds);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (poly->parsed()) return cmd_poly(spec_text, format);
    if (grid->parsed()) {
      if (!grid_file.empty()) return cmd_grid_file(grid_file, format);
      if (!*gp_opt || !*gq_opt || !*gr_opt) throw UsageError("grid needs -p, -q and -r, or --input");
      return cmd_grid(gp, gq, gr, format, !no_verify, grid_max);
    }
    if (bounds->parsed()) {
      if (table != 0) {
        if (!bp.empty() || !bq.empty() || !br.empty()) throw UsageError("--table cannot be combined with -p/-q/-r");
        return cmd_table(table, format);
      }
      return cmd_bounds(bp, bq, br, format, bounds_max);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
