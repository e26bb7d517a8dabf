#include "anglechain/reports.hpp"

namespace anglechain {

namespace {

Json params_json(const std::map<std::string, std::string>& params) {
  Json j = Json::object();
  for (const auto& [key, value] : params) j[key] = value;
  return j;
}

}  // namespace

Json count_report_json(const CountReport& report, double tol) {
  Json j;
  j["count"] = report.count.str();
  j["n"] = report.n;
  j["k"] = report.k;
  j["method"] = report.method;
  j["distinct"] = report.distinctness;
  j["tol"] = tol;
  j["elapsed_s"] = report.elapsed_s;
  if (!report.witnesses.empty()) {
    Json w = Json::array();
    for (const auto& tuple : report.witnesses) w.push_back(tuple);
    j["witnesses"] = std::move(w);
  }
  return j;
}

Json rich_lines_report_json(const RichLineReport& report, Index n, double elapsed_s) {
  Json j;
  j["count"] = std::to_string(report.line_count);
  j["n"] = n;
  j["r"] = report.r;
  j["method"] = "rich-lines";
  j["elapsed_s"] = elapsed_s;
  if (!report.lines.empty()) {
    Json lines = Json::array();
    for (const auto& line : report.lines) {
      Json l;
      l["direction"] = std::vector<double>(line.direction.data(),
                                           line.direction.data() + line.direction.size());
      l["anchor"] =
          std::vector<double>(line.anchor.data(), line.anchor.data() + line.anchor.size());
      l["members"] = line.members;
      lines.push_back(std::move(l));
    }
    j["lines"] = std::move(lines);
  }
  return j;
}

Json pair_distance_report_json(std::int64_t count, Index n, double dist, double tol,
                               double elapsed_s) {
  Json j;
  j["count"] = std::to_string(count);
  j["n"] = n;
  j["distance"] = dist;
  j["tol"] = tol;
  j["method"] = "pair-distance";
  j["elapsed_s"] = elapsed_s;
  return j;
}

Json generate_report_json(const ConstructionOutput& out, const std::string& name) {
  Json j;
  j["construction"] = name;
  j["n"] = out.points.size();
  j["dim"] = out.points.dim();
  if (out.points.pin()) j["pin"] = *out.points.pin();
  j["claimed_exponent"] =
      std::to_string(out.claimed_exponent.first) +
      (out.claimed_exponent.second == 1 ? "" : "/" + std::to_string(out.claimed_exponent.second));
  Json angles = Json::array();
  for (const auto& spec : out.angle_type) angles.push_back(spec.radians);
  j["angle_type"] = std::move(angles);
  j["designated_floor"] = out.designated_floor.str();
  j["params"] = params_json(out.params);
  return j;
}

Json sweep_report_json(const std::vector<SweepSample>& samples, const FitResult& fit) {
  Json j;
  Json list = Json::array();
  for (const auto& s : samples) {
    Json e;
    e["n"] = s.n;
    e["count"] = s.count.str();
    e["construction"] = s.construction;
    e["params"] = params_json(s.params);
    list.push_back(std::move(e));
  }
  j["samples"] = std::move(list);
  Json f;
  f["slope"] = fit.slope;
  f["intercept"] = fit.intercept;
  f["r_squared"] = fit.r_squared;
  f["samples_used"] = fit.samples_used;
  j["fit"] = std::move(f);
  return j;
}

Json search_report_json(const SearchState& state, const SearchOptions& opts) {
  Json j;
  j["best_score"] = state.best_score;
  j["initial_score"] = state.initial_score;
  j["best_count"] = state.best_count.str();
  j["iterations"] = state.iterations;
  j["seed"] = state.seed;
  j["n"] = opts.n;
  j["dim"] = opts.dim;
  j["params"] = params_json(state.params);
  return j;
}

Json validate_report_json(const PointSet& ps, const std::vector<std::string>& issues) {
  Json j;
  j["valid"] = issues.empty();
  j["n"] = ps.size();
  j["dim"] = ps.dim();
  if (ps.pin()) j["pin"] = *ps.pin();
  j["exact"] = ps.has_exact();
  j["issues"] = issues;
  return j;
}

std::string dump_single_line(const Json& j) { return j.dump(); }

}  // namespace anglechain
