#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "anglechain/analysis.hpp"
#include "anglechain/constructions.hpp"
#include "anglechain/counting.hpp"

namespace anglechain {

// Single-line JSON reports shared by the CLI and the tests, so what the CLI
// prints is exactly what the library computed. Counts are decimal strings:
// they can exceed any fixed integer width. Sweep and search reports contain
// no wall-clock fields; identical seeds must reproduce identical bytes.

using Json = nlohmann::ordered_json;

Json count_report_json(const CountReport& report, double tol);
Json rich_lines_report_json(const RichLineReport& report, Index n, double elapsed_s);
Json pair_distance_report_json(std::int64_t count, Index n, double dist, double tol,
                               double elapsed_s);
Json generate_report_json(const ConstructionOutput& out, const std::string& name);
Json sweep_report_json(const std::vector<SweepSample>& samples, const FitResult& fit);
Json search_report_json(const SearchState& state, const SearchOptions& opts);
Json validate_report_json(const PointSet& ps, const std::vector<std::string>& issues);

std::string dump_single_line(const Json& j);

}  // namespace anglechain
