#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "anglechain/constructions.hpp"
#include "anglechain/counting.hpp"
#include "anglechain/core.hpp"

namespace anglechain {

struct SweepSample {
  int n = 0;
  BigInt count = 0;
  std::string construction;
  std::map<std::string, std::string> params;
};

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int samples_used = 0;
};

/// What to evaluate on each generated set of a sweep: a chain query, a
/// pair-distance count, or a rich-line count.
struct SweepTask {
  enum class Kind { chains, pair_distance, rich_lines };
  Kind kind = Kind::chains;
  ChainQuery query;
  double distance = 0.0;
  double distance_tol = kDefaultCosineTol;
  int rich_r = 2;
};

/// Generates req's family at every n in the (strictly increasing, length >= 2)
/// grid and counts with the requested task. Deterministic given seeds.
std::vector<SweepSample> scaling_sweep(const ConstructionRequest& req,
                                       const std::vector<int>& n_grid, const SweepTask& task);

/// OLS slope of ln(count) against ln(n).
FitResult fit_exponent(const std::vector<SweepSample>& samples);

struct SearchOptions {
  int dim = 3;
  int n = 16;
  std::vector<AngleSpec> angles;
  long iters = 100;
  std::uint64_t seed = 0;
  std::pair<long, long> target_exponent{3, 1};
  std::string init = "lattice";  // "lattice" (perturbed) or "random"
  Distinctness distinctness = Distinctness::local;
  double op_budget = 5e8;  // per-count operation estimate limit
};

struct SearchState {
  PointSet best_points{2};
  double best_score = 0.0;
  double initial_score = 0.0;
  BigInt best_count = 0;
  long iterations = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> params;
};

/// Hill climbing over single-point Gaussian perturbations maximizing
/// count / n^target. The score history is nondecreasing and the whole run is
/// reproducible from the seed.
SearchState search_extremal(const SearchOptions& opts);

}  // namespace anglechain
