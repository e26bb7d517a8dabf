#include "anglechain/analysis.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace anglechain {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

BigInt evaluate_task(const PointSet& ps, const SweepTask& task) {
  switch (task.kind) {
    case SweepTask::Kind::chains:
      return count_chains(ps, task.query).count;
    case SweepTask::Kind::pair_distance:
      return BigInt(count_pairs_at_distance(ps, task.distance, task.distance_tol));
    case SweepTask::Kind::rich_lines:
      return BigInt(count_rich_lines(ps, task.rich_r).line_count);
  }
  throw InvalidParamsError("unknown sweep task");
}

}  // namespace

std::vector<SweepSample> scaling_sweep(const ConstructionRequest& req,
                                       const std::vector<int>& n_grid, const SweepTask& task) {
  if (n_grid.size() < 2)
    throw InvalidParamsError("a sweep needs at least two grid values");
  for (std::size_t i = 1; i < n_grid.size(); ++i) {
    if (n_grid[i] <= n_grid[i - 1])
      throw InvalidParamsError("the sweep grid must be strictly increasing");
  }

  std::vector<SweepSample> samples;
  samples.reserve(n_grid.size());
  for (int n : n_grid) {
    ConstructionRequest r = req;
    r.n = n;
    ConstructionOutput out = make_construction(r);
    SweepTask t = task;
    if (t.kind == SweepTask::Kind::chains) {
      if (t.query.angles.empty()) t.query.angles = out.angle_type;
      if (t.query.pin.mode == PinSpec::Mode::first && out.points.pin())
        t.query.pin.index = *out.points.pin();  // pin travels with the generated set
    }
    SweepSample s;
    s.n = n;
    s.count = evaluate_task(out.points, t);
    s.construction = req.name;
    s.params = out.params;
    s.params["points"] = std::to_string(out.points.size());
    samples.push_back(std::move(s));
  }
  return samples;
}

FitResult fit_exponent(const std::vector<SweepSample>& samples) {
  if (samples.size() < 2)
    throw DegenerateFitError("exponent fit needs at least two samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  const auto n = static_cast<double>(samples.size());
  for (const auto& s : samples) {
    if (s.count <= 0) throw DegenerateFitError("exponent fit needs positive counts");
    const double x = std::log(static_cast<double>(s.n));
    const double y = static_cast<double>(boost::multiprecision::log(
        boost::multiprecision::cpp_bin_float_50(s.count)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double var_x = sxx - sx * sx / n;
  if (var_x <= 0.0) throw DegenerateFitError("all sample sizes equal; slope undefined");

  FitResult fit;
  fit.samples_used = static_cast<int>(samples.size());
  fit.slope = (sxy - sx * sy / n) / var_x;
  fit.intercept = (sy - fit.slope * sx) / n;
  const double var_y = syy - sy * sy / n;
  if (var_y <= 0.0) {
    fit.r_squared = 1.0;  // constant counts: the fit is exact with slope 0
  } else {
    const double cov = sxy - sx * sy / n;
    fit.r_squared = std::clamp((cov * cov) / (var_x * var_y), 0.0, 1.0);
  }
  return fit;
}

SearchState search_extremal(const SearchOptions& opts) {
  if (opts.dim < 2) throw InvalidParamsError("search needs dim >= 2");
  if (opts.n > 64)
    throw InvalidParamsError("search re-counts every step; n is capped at 64");
  if (opts.n < static_cast<int>(opts.angles.size()) + 2)
    throw InvalidParamsError("search needs n >= k + 2");
  if (opts.iters < 0) throw InvalidParamsError("iters must be >= 0");

  const int k = static_cast<int>(opts.angles.size());
  const double ops_per_count = static_cast<double>(k) * std::pow(opts.n, 3);
  if (ops_per_count > opts.op_budget)
    throw BudgetExceededError("per-iteration count estimate " + fmt(ops_per_count) +
                              " exceeds the operation budget " + fmt(opts.op_budget));

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  // Initial configuration: a perturbed lattice (default) or uniform random.
  Mat coords(opts.dim, opts.n);
  if (opts.init == "random") {
    for (Index c = 0; c < coords.cols(); ++c)
      for (Index r = 0; r < coords.rows(); ++r) coords(r, c) = unif(rng);
  } else if (opts.init == "lattice") {
    const int side = static_cast<int>(std::ceil(std::pow(static_cast<double>(opts.n),
                                                         1.0 / opts.dim)));
    const double spacing = 1.0 / std::max(1, side);
    for (int i = 0; i < opts.n; ++i) {
      int rem = i;
      for (int r = 0; r < opts.dim; ++r) {
        coords(r, i) = spacing * (rem % side) + 0.05 * spacing * gauss(rng);
        rem /= side;
      }
    }
  } else {
    throw InvalidParamsError("init must be 'lattice' or 'random'");
  }

  ChainQuery q;
  q.angles = opts.angles;
  q.distinctness = opts.distinctness;
  q.method = (opts.distinctness == Distinctness::local) ? Method::dp : Method::brute;

  const double target = static_cast<double>(opts.target_exponent.first) /
                        static_cast<double>(opts.target_exponent.second);
  const double norm = std::pow(static_cast<double>(opts.n), target);
  const auto score_of = [&](const PointSet& ps, BigInt& count_out) {
    const auto report = count_chains(ps, q);
    count_out = report.count;
    return static_cast<double>(report.count) / norm;
  };

  PointSet best = PointSet::from_columns(coords);
  BigInt best_count = 0;
  double best_score = score_of(best, best_count);
  const double initial_score = best_score;

  double step = 0.1;  // adaptive Gaussian step scale
  long accepted = 0;
  std::uniform_int_distribution<int> pick(0, opts.n - 1);
  for (long it = 0; it < opts.iters; ++it) {
    const int move_idx = pick(rng);
    Vec probe(opts.dim);
    for (int r = 0; r < opts.dim; ++r) probe(r) = gauss(rng);
    PointSet trial = best;
    trial.set_point(move_idx, best.point(move_idx) + step * probe);

    BigInt trial_count = 0;
    double trial_score = -1.0;
    bool degenerate = false;
    try {
      trial_score = score_of(trial, trial_count);
    } catch (const DuplicatePointsError&) {
      degenerate = true;  // the move landed on another point; reject
    }
    if (!degenerate && trial_score > best_score) {
      best = std::move(trial);
      best_score = trial_score;
      best_count = trial_count;
      ++accepted;
      step = std::min(step * 1.3, 1.0);
    } else {
      step = std::max(step * 0.97, 1e-4);
    }
  }

  SearchState state;
  state.best_points = std::move(best);
  state.best_score = best_score;
  state.initial_score = initial_score;
  state.best_count = best_count;
  state.iterations = opts.iters;
  state.seed = opts.seed;
  state.params["init"] = opts.init;
  state.params["accepted"] = std::to_string(accepted);
  state.params["final_step"] = fmt(step);
  state.params["target_exponent"] = std::to_string(opts.target_exponent.first) + "/" +
                                    std::to_string(opts.target_exponent.second);
  state.params["step_schedule"] = "x1.3 on accept, x0.97 on reject, clamp [1e-4, 1]";
  return state;
}

}  // namespace anglechain
