// Command-line front end: generate the extremal constructions, count chains
// and related statistics on point-set files, sweep construction families over
// a size grid with a log-log exponent fit, and hill-climb for configurations
// with unusually many chains. All results are single-line JSON on stdout;
// counts are decimal strings.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "anglechain/analysis.hpp"
#include "anglechain/constructions.hpp"
#include "anglechain/counting.hpp"
#include "anglechain/errors.hpp"
#include "anglechain/io.hpp"
#include "anglechain/reports.hpp"

namespace {

using namespace anglechain;

std::vector<AngleSpec> parse_angle_list(const std::string& text, double tol) {
  std::vector<AngleSpec> specs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) specs.push_back(parse_angle(item, tol));
  }
  if (specs.empty()) throw ParseError("empty angle list '" + text + "'");
  return specs;
}

PinSpec parse_pin(const std::string& text) {
  if (text.empty() || text == "none") return PinSpec::none();
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ParseError("pin must be none, first:IDX or middle:IDX, got '" + text + "'");
  const std::string mode = text.substr(0, colon);
  Index idx = 0;
  try {
    idx = static_cast<Index>(std::stoll(text.substr(colon + 1)));
  } catch (const std::exception&) {
    throw ParseError("bad pin index in '" + text + "'");
  }
  if (mode == "first") return PinSpec::first(idx);
  if (mode == "middle") return PinSpec::middle(idx);
  throw ParseError("pin mode must be first or middle, got '" + mode + "'");
}

Method parse_method(const std::string& text) {
  if (text == "brute") return Method::brute;
  if (text == "dp") return Method::dp;
  if (text == "planar-fast") return Method::planar_fast;
  if (text == "auto") return Method::auto_select;
  throw ParseError("method must be brute, dp, planar-fast or auto, got '" + text + "'");
}

std::pair<long, long> parse_exponent(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return {std::stol(text), 1};
    return {std::stol(text.substr(0, slash)), std::stol(text.substr(slash + 1))};
  } catch (const std::exception&) {
    throw ParseError("bad exponent '" + text + "', expected p or p/q");
  }
}

struct CommonCountFlags {
  std::string input;
  Index dim = 0;
  std::string angles;
  double distance = 0.0;
  int rich_r = 0;
  double tol = kDefaultCosineTol;
  std::string method = "auto";
  std::string distinct = "full";
  std::string pin = "none";
  int witnesses = 0;
  bool allow_duplicates = false;
};

int run_count(const CommonCountFlags& f) {
  const std::optional<Index> csv_dim = f.dim > 0 ? std::optional<Index>(f.dim) : std::nullopt;
  const PointSet ps = load_pointset(f.input, csv_dim);

  if (f.distance > 0.0) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto count = count_pairs_at_distance(ps, f.distance, f.tol);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << dump_single_line(pair_distance_report_json(count, ps.size(), f.distance, f.tol,
                                                            elapsed))
              << "\n";
    return 0;
  }
  if (f.rich_r > 0) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto report = count_rich_lines(ps, f.rich_r, f.witnesses > 0);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << dump_single_line(rich_lines_report_json(report, ps.size(), elapsed)) << "\n";
    return 0;
  }

  ChainQuery q;
  q.angles = parse_angle_list(f.angles, f.tol);
  q.pin = parse_pin(f.pin);
  q.distinctness = (f.distinct == "local") ? Distinctness::local : Distinctness::full;
  if (f.distinct != "local" && f.distinct != "full")
    throw ParseError("--distinct must be local or full");
  q.method = parse_method(f.method);
  q.witness_cap = f.witnesses;
  q.allow_duplicates = f.allow_duplicates;
  const CountReport report = count_chains(ps, q);
  std::cout << dump_single_line(count_report_json(report, f.tol)) << "\n";
  return 0;
}

ConstructionRequest build_request(const std::string& name, int n, int k, int dim,
                                  const std::string& angles, const std::string& c_list,
                                  bool pinned, std::uint64_t seed, double tol) {
  ConstructionRequest req;
  req.name = name;
  req.n = n;
  req.k = k;
  req.dim = dim;
  req.pinned = pinned;
  req.seed = seed;
  if (!angles.empty()) req.angles = parse_angle_list(angles, tol);
  if (!c_list.empty()) {
    std::stringstream ss(c_list);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        req.c.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw ParseError("bad radius '" + item + "' in --c");
      }
    }
  }
  return req;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"angle k-chain counting, extremal constructions and scaling analysis"};
  app.require_subcommand(1);

  // ---- generate ----
  auto* gen = app.add_subcommand("generate", "emit a construction as a point-set file");
  std::string g_name, g_angles, g_c, g_out;
  int g_n = 0, g_k = 1, g_dim = 2;
  bool g_pinned = false;
  std::uint64_t g_seed = 0;
  double g_tol = kDefaultCosineTol;
  gen->add_option("--construction", g_name, "family name")->required();
  gen->add_option("--n", g_n, "requested size")->required();
  gen->add_option("--k", g_k, "chain length for the r6 families");
  gen->add_option("--dim", g_dim, "embedding dimension (middle-pinned)");
  gen->add_option("--angles", g_angles, "comma-separated angle list");
  gen->add_option("--c", g_c, "comma-separated radii for acute-kchains-r6");
  gen->add_flag("--pinned", g_pinned, "pinned variant (r6 families)");
  gen->add_option("--seed", g_seed, "jitter seed (railroad)");
  gen->add_option("--tol", g_tol, "cosine tolerance for parsed angles");
  gen->add_option("--out", g_out, "output point-set JSON path");

  // ---- count ----
  auto* cnt = app.add_subcommand("count", "count chains / pairs / rich lines in a file");
  CommonCountFlags cf;
  cnt->add_option("--input", cf.input, "point-set file (JSON or CSV)")->required();
  cnt->add_option("--dim", cf.dim, "dimension (required for CSV input)");
  cnt->add_option("--angles", cf.angles, "comma-separated angle list");
  cnt->add_option("--distance", cf.distance, "count point pairs at this distance instead");
  cnt->add_option("--rich-lines", cf.rich_r, "count lines with at least r points instead");
  cnt->add_option("--tol", cf.tol, "tolerance (cosine / distance / collinearity)");
  cnt->add_option("--method", cf.method, "brute | dp | planar-fast | auto");
  cnt->add_option("--distinct", cf.distinct, "local | full");
  cnt->add_option("--pin", cf.pin, "none | first:IDX | middle:IDX");
  cnt->add_option("--witnesses", cf.witnesses, "collect up to this many witness tuples");
  cnt->add_flag("--allow-duplicates", cf.allow_duplicates,
                "permit duplicate points (their degenerate triples are skipped)");

  // ---- sweep ----
  auto* swp = app.add_subcommand("sweep", "generate a family over a size grid and fit the slope");
  std::string s_name, s_angles, s_c, s_grid, s_method = "auto", s_distinct = "local",
                                             s_pin = "none";
  int s_k = 1, s_dim = 2, s_rich = 0;
  bool s_pinned = false;
  std::uint64_t s_seed = 0;
  double s_tol = kDefaultCosineTol, s_distance = 0.0;
  swp->add_option("--construction", s_name, "family name")->required();
  swp->add_option("--n-grid", s_grid, "comma-separated sizes, strictly increasing")->required();
  swp->add_option("--k", s_k, "chain length for the r6 families");
  swp->add_option("--dim", s_dim, "embedding dimension (middle-pinned)");
  swp->add_option("--angles", s_angles, "angle list (defaults to the family's angle type)");
  swp->add_option("--c", s_c, "radii for acute-kchains-r6");
  swp->add_flag("--pinned", s_pinned, "pinned variant");
  swp->add_option("--seed", s_seed, "jitter seed");
  swp->add_option("--tol", s_tol, "tolerance");
  swp->add_option("--method", s_method, "counting method");
  swp->add_option("--distinct", s_distinct, "local | full");
  swp->add_option("--pin", s_pin, "none | first:IDX (IDX follows the generated pin)");
  swp->add_option("--distance", s_distance, "sweep pair-distance counts instead of chains");
  swp->add_option("--rich-lines", s_rich, "sweep rich-line counts instead of chains");

  // ---- search ----
  auto* sch = app.add_subcommand("search", "hill-climb a configuration maximizing count/n^e");
  std::string x_angles, x_exponent = "3", x_init = "lattice", x_out;
  int x_dim = 3, x_n = 16;
  long x_iters = 100;
  std::uint64_t x_seed = 0;
  double x_tol = kDefaultCosineTol;
  sch->add_option("--dim", x_dim, "ambient dimension");
  sch->add_option("--n", x_n, "number of points (<= 64)");
  sch->add_option("--angles", x_angles, "angle list")->required();
  sch->add_option("--iters", x_iters, "hill-climbing iterations");
  sch->add_option("--seed", x_seed, "random seed");
  sch->add_option("--target-exponent", x_exponent, "normalization exponent p or p/q");
  sch->add_option("--init", x_init, "lattice | random");
  sch->add_option("--tol", x_tol, "cosine tolerance");
  sch->add_option("--out", x_out, "write the best configuration to this path");

  // ---- validate ----
  auto* val = app.add_subcommand("validate", "check a point-set file");
  std::string v_input;
  Index v_dim = 0;
  val->add_option("--input", v_input, "point-set file")->required();
  val->add_option("--dim", v_dim, "dimension (required for CSV input)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) {
      const auto req =
          build_request(g_name, g_n, g_k, g_dim, g_angles, g_c, g_pinned, g_seed, g_tol);
      const ConstructionOutput out = make_construction(req);
      if (!g_out.empty()) save_pointset(out.points, g_out);
      std::cout << dump_single_line(generate_report_json(out, g_name)) << "\n";
      return 0;
    }
    if (cnt->parsed()) return run_count(cf);
    if (swp->parsed()) {
      std::vector<int> grid;
      std::stringstream ss(s_grid);
      std::string item;
      while (std::getline(ss, item, ',')) grid.push_back(std::stoi(item));
      const auto req =
          build_request(s_name, 0, s_k, s_dim, s_angles, s_c, s_pinned, s_seed, s_tol);
      SweepTask task;
      if (s_distance > 0.0) {
        task.kind = SweepTask::Kind::pair_distance;
        task.distance = s_distance;
        task.distance_tol = s_tol;
      } else if (s_rich > 0) {
        task.kind = SweepTask::Kind::rich_lines;
        task.rich_r = s_rich;
      } else {
        task.kind = SweepTask::Kind::chains;
        task.query.angles = req.angles;
        task.query.method = parse_method(s_method);
        task.query.distinctness = (s_distinct == "full") ? Distinctness::full : Distinctness::local;
        task.query.pin = parse_pin(s_pin);
      }
      const auto samples = scaling_sweep(req, grid, task);
      const auto fit = fit_exponent(samples);
      std::cout << dump_single_line(sweep_report_json(samples, fit)) << "\n";
      return 0;
    }
    if (sch->parsed()) {
      SearchOptions opts;
      opts.dim = x_dim;
      opts.n = x_n;
      opts.angles = parse_angle_list(x_angles, x_tol);
      opts.iters = x_iters;
      opts.seed = x_seed;
      opts.target_exponent = parse_exponent(x_exponent);
      opts.init = x_init;
      const SearchState state = search_extremal(opts);
      if (!x_out.empty()) save_pointset(state.best_points, x_out);
      std::cout << dump_single_line(search_report_json(state, opts)) << "\n";
      return 0;
    }
    if (val->parsed()) {
      const std::optional<Index> csv_dim = v_dim > 0 ? std::optional<Index>(v_dim) : std::nullopt;
      const PointSet ps = load_pointset(v_input, csv_dim);
      const auto issues = validate_pointset(ps);
      std::cout << dump_single_line(validate_report_json(ps, issues)) << "\n";
      return issues.empty() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const OutOfRangeError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const QueryInvalidError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
