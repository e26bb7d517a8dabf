#include "anglechain/counting.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

namespace anglechain {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Counter-internal predicate: degenerate triples (a coordinate-repeated
// vertex) are skipped rather than raised, so that sets loaded with
// allow_duplicates still count cleanly. All counters share this one path,
// which is what makes their counts comparable bit for bit.
class TripleMatcher {
 public:
  explicit TripleMatcher(const PointSet& ps) : ps_(ps) {}

  bool operator()(Index a, Index b, Index c, const AngleSpec& spec) const {
    if (spec.exact_right && ps_.has_exact()) {
      const auto& ex = ps_.exact();
      if (ex.col(a) == ex.col(b) || ex.col(c) == ex.col(b)) return false;
      return perpendicular_exact(ex.col(a), ex.col(b), ex.col(c));
    }
    double cosv = 0.0;
    if (!try_angle_cosine(ps_, a, b, c, cosv)) return false;
    return std::abs(cosv - spec.cosine) <= spec.tol;
  }

 private:
  const PointSet& ps_;
};

void validate_query(const PointSet& ps, const ChainQuery& q) {
  if (q.angles.empty()) throw QueryInvalidError("a chain query needs at least one angle (k >= 1)");
  if (q.pin.mode != PinSpec::Mode::none &&
      (q.pin.index < 0 || q.pin.index >= ps.size()))
    throw QueryInvalidError("pin index " + std::to_string(q.pin.index) + " out of range");
  if (q.pin.mode == PinSpec::Mode::middle && q.k() != 1)
    throw QueryInvalidError("a middle pin only makes sense for single angles (k = 1)");
  if (q.method == Method::planar_fast) {
    if (q.k() != 1) throw QueryInvalidError("planar_fast counts single angles only (k = 1)");
    if (ps.dim() != 2) throw DimensionMismatchError("planar_fast requires dim = 2");
    if (q.pin.mode == PinSpec::Mode::middle)
      throw QueryInvalidError("planar_fast supports pin modes none/first only");
  }
  require_countable(ps, q.allow_duplicates);
}

}  // namespace

std::string to_string(Distinctness d) {
  return d == Distinctness::local ? "local" : "full";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::brute: return "brute";
    case Method::dp: return "dp";
    case Method::planar_fast: return "planar-fast";
    case Method::auto_select: return "auto";
  }
  return "?";
}

CountReport count_chains_bruteforce(const PointSet& ps, const ChainQuery& q) {
  const auto t0 = Clock::now();
  validate_query(ps, q);
  if (q.pin.mode == PinSpec::Mode::middle)
    return count_middle_pinned_triples(ps, q.angles[0], q.pin.index, q.witness_cap,
                                       q.allow_duplicates);

  const Index n = ps.size();
  const int k = q.k();
  const int tuple_len = k + 2;
  const bool full = (q.distinctness == Distinctness::full);
  const TripleMatcher match(ps);

  BigInt count = 0;
  std::vector<Index> tuple(static_cast<std::size_t>(tuple_len));
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Index>> witnesses;

  // Depth-first extension: position t is chosen once positions < t hold a
  // valid prefix, pruning on the angle ending at each new point.
  auto extend = [&](auto&& self, int t) -> void {
    if (t == tuple_len) {
      ++count;
      if (q.witness_cap > 0 && static_cast<int>(witnesses.size()) < q.witness_cap)
        witnesses.push_back(tuple);
      return;
    }
    for (Index c = 0; c < n; ++c) {
      if (full && used[static_cast<std::size_t>(c)]) continue;
      if (!full) {
        if (c == tuple[static_cast<std::size_t>(t - 1)] ||
            c == tuple[static_cast<std::size_t>(t - 2)])
          continue;
      }
      if (!match(tuple[static_cast<std::size_t>(t - 2)], tuple[static_cast<std::size_t>(t - 1)],
                 c, q.angles[static_cast<std::size_t>(t - 2)]))
        continue;
      tuple[static_cast<std::size_t>(t)] = c;
      used[static_cast<std::size_t>(c)] = 1;
      self(self, t + 1);
      used[static_cast<std::size_t>(c)] = 0;
    }
  };

  const bool pinned_first = (q.pin.mode == PinSpec::Mode::first);
  const Index a_lo = pinned_first ? q.pin.index : 0;
  const Index a_hi = pinned_first ? q.pin.index + 1 : n;
  for (Index a = a_lo; a < a_hi; ++a) {
    tuple[0] = a;
    used[static_cast<std::size_t>(a)] = 1;
    for (Index b = 0; b < n; ++b) {
      if (b == a) continue;
      if (full && used[static_cast<std::size_t>(b)]) continue;
      tuple[1] = b;
      used[static_cast<std::size_t>(b)] = 1;
      extend(extend, 2);
      used[static_cast<std::size_t>(b)] = 0;
    }
    used[static_cast<std::size_t>(a)] = 0;
  }

  CountReport report;
  report.count = count;
  report.method = "brute";
  report.distinctness = to_string(q.distinctness);
  report.k = k;
  report.n = n;
  report.witnesses = std::move(witnesses);
  report.elapsed_s = seconds_since(t0);
  return report;
}

CountReport count_chains_dp(const PointSet& ps, const ChainQuery& q) {
  const auto t0 = Clock::now();
  validate_query(ps, q);
  if (q.distinctness == Distinctness::full)
    throw UnsupportedSemanticsError(
        "the pair-state walk count cannot enforce full tuple distinctness; use the brute path");
  if (q.pin.mode == PinSpec::Mode::middle)
    throw QueryInvalidError("middle pins are not a DP query");
  if (q.witness_cap > 0)
    throw QueryInvalidError("witness collection is available on the brute and planar paths only");

  const Index n = ps.size();
  const int k = q.k();
  const TripleMatcher match(ps);
  const bool pinned_first = (q.pin.mode == PinSpec::Mode::first);

  // dp[a*n + b] = number of valid prefixes ending with the ordered pair (a,b).
  std::vector<BigInt> dp(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), BigInt(0));
  for (Index a = 0; a < n; ++a) {
    if (pinned_first && a != q.pin.index) continue;
    for (Index b = 0; b < n; ++b) {
      if (b == a) continue;
      dp[static_cast<std::size_t>(a * n + b)] = 1;
    }
  }

  std::vector<BigInt> next(dp.size());
  for (int step = 0; step < k; ++step) {
    const AngleSpec& spec = q.angles[static_cast<std::size_t>(step)];
    std::fill(next.begin(), next.end(), BigInt(0));
    for (Index b = 0; b < n; ++b) {
      for (Index a = 0; a < n; ++a) {
        const BigInt& ways = dp[static_cast<std::size_t>(a * n + b)];
        if (ways == 0) continue;
        for (Index c = 0; c < n; ++c) {
          if (c == b || c == a) continue;
          if (!match(a, b, c, spec)) continue;
          next[static_cast<std::size_t>(b * n + c)] += ways;
        }
      }
    }
    dp.swap(next);
  }

  BigInt count = 0;
  for (const BigInt& v : dp) count += v;

  CountReport report;
  report.count = count;
  report.method = "dp";
  report.distinctness = "local";
  report.k = k;
  report.n = n;
  report.elapsed_s = seconds_since(t0);
  return report;
}

CountReport count_triples_planar_fast(const PointSet& ps, const AngleSpec& spec,
                                      std::optional<Index> pin, int witness_cap,
                                      bool allow_duplicates) {
  const auto t0 = Clock::now();
  if (ps.dim() != 2) throw DimensionMismatchError("planar_fast requires dim = 2");
  if (pin && (*pin < 0 || *pin >= ps.size())) throw QueryInvalidError("pin index out of range");
  require_countable(ps, allow_duplicates);

  const Index n = ps.size();
  const TripleMatcher match(ps);
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  // Straddle the cosine tolerance with an angular window and a generous pad;
  // the window only prunes, every candidate is re-verified with the shared
  // predicate, so the count is bit-identical to brute force.
  const double delta_lo = std::acos(std::min(1.0, spec.cosine + spec.tol));
  const double delta_hi = std::acos(std::max(-1.0, spec.cosine - spec.tol));
  const double pad = 1e-6;
  const double arc_lo = std::max(0.0, delta_lo - pad);
  const double arc_hi = std::min(std::numbers::pi, delta_hi + pad);

  BigInt count = 0;
  std::vector<std::vector<Index>> witnesses;
  std::vector<std::pair<double, Index>> dirs;
  std::vector<Index> candidates;

  for (Index b = 0; b < n; ++b) {
    dirs.clear();
    for (Index i = 0; i < n; ++i) {
      if (i == b || ps.point(i) == ps.point(b)) continue;
      double th = std::atan2(ps.coords()(1, i) - ps.coords()(1, b),
                             ps.coords()(0, i) - ps.coords()(0, b));
      if (th < 0.0) th += kTwoPi;
      dirs.emplace_back(th, i);
    }
    if (dirs.size() < 2) continue;
    std::sort(dirs.begin(), dirs.end());

    const auto collect_arc = [&](double lo, double hi) {
      // [lo, hi] on the circle; hi - lo <= 2*pi.
      if (hi - lo >= kTwoPi) {
        for (const auto& [th, idx] : dirs) candidates.push_back(idx);
        return;
      }
      double start = std::fmod(lo, kTwoPi);
      if (start < 0.0) start += kTwoPi;
      const double end = start + (hi - lo);
      auto it = std::lower_bound(dirs.begin(), dirs.end(), std::make_pair(start, Index(-1)));
      for (; it != dirs.end() && it->first <= end; ++it) candidates.push_back(it->second);
      if (end > kTwoPi) {
        const double wrapped = end - kTwoPi;
        for (auto jt = dirs.begin(); jt != dirs.end() && jt->first <= wrapped; ++jt)
          candidates.push_back(jt->second);
      }
    };

    const auto count_from = [&](Index a, double theta_a) {
      candidates.clear();
      collect_arc(theta_a + arc_lo, theta_a + arc_hi);
      collect_arc(theta_a - arc_hi, theta_a - arc_lo);
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      for (Index c : candidates) {
        if (c == a) continue;
        if (!match(a, b, c, spec)) continue;
        ++count;
        if (witness_cap > 0 && static_cast<int>(witnesses.size()) < witness_cap)
          witnesses.push_back({a, b, c});
      }
    };

    if (pin) {
      if (*pin == b || ps.point(*pin) == ps.point(b)) continue;
      double th = std::atan2(ps.coords()(1, *pin) - ps.coords()(1, b),
                             ps.coords()(0, *pin) - ps.coords()(0, b));
      if (th < 0.0) th += kTwoPi;
      count_from(*pin, th);
    } else {
      for (const auto& [theta_a, a] : dirs) count_from(a, theta_a);
    }
  }

  CountReport report;
  report.count = count;
  report.method = "planar-fast";
  report.distinctness = "full";  // for k = 1 local and full coincide
  report.k = 1;
  report.n = n;
  report.witnesses = std::move(witnesses);
  report.elapsed_s = seconds_since(t0);
  return report;
}

CountReport count_pinned_chains(const PointSet& ps, const ChainQuery& q) {
  if (q.pin.mode != PinSpec::Mode::first)
    throw QueryInvalidError("count_pinned_chains needs pin = first(i)");
  const auto planar = [&] {
    auto report = count_triples_planar_fast(ps, q.angles.at(0), q.pin.index, q.witness_cap,
                                            q.allow_duplicates);
    report.distinctness = to_string(q.distinctness);  // identical counts at k = 1
    return report;
  };
  switch (q.method) {
    case Method::brute:
      return count_chains_bruteforce(ps, q);
    case Method::dp:
      return count_chains_dp(ps, q);
    case Method::planar_fast:
      return planar();
    case Method::auto_select:
      if (q.k() == 1 && ps.dim() == 2 && !(q.angles.at(0).exact_right && ps.has_exact()))
        return planar();
      if (q.distinctness == Distinctness::local && q.witness_cap == 0)
        return count_chains_dp(ps, q);
      return count_chains_bruteforce(ps, q);
  }
  throw QueryInvalidError("unknown method");
}

CountReport count_middle_pinned_triples(const PointSet& ps, const AngleSpec& spec, Index pin,
                                        int witness_cap, bool allow_duplicates) {
  const auto t0 = Clock::now();
  if (pin < 0 || pin >= ps.size()) throw QueryInvalidError("pin index out of range");
  require_countable(ps, allow_duplicates);

  const Index n = ps.size();
  const TripleMatcher match(ps);
  BigInt count = 0;
  std::vector<std::vector<Index>> witnesses;
  for (Index a = 0; a < n; ++a) {
    if (a == pin) continue;
    for (Index c = 0; c < n; ++c) {
      if (c == pin || c == a) continue;
      if (!match(a, pin, c, spec)) continue;
      ++count;
      if (witness_cap > 0 && static_cast<int>(witnesses.size()) < witness_cap)
        witnesses.push_back({a, pin, c});
    }
  }

  CountReport report;
  report.count = count;
  report.method = "middle-pinned";
  report.distinctness = "full";
  report.k = 1;
  report.n = n;
  report.witnesses = std::move(witnesses);
  report.elapsed_s = seconds_since(t0);
  return report;
}

std::int64_t count_pairs_at_distance(const PointSet& ps, double dist, double tol) {
  if (!(dist > 0.0)) throw InvalidParamsError("distance must be positive");
  std::int64_t count = 0;
  for (Index i = 0; i < ps.size(); ++i) {
    for (Index j = i + 1; j < ps.size(); ++j) {
      const double d = (ps.point(i) - ps.point(j)).norm();
      if (std::abs(d - dist) <= tol) ++count;
    }
  }
  return count;
}

CountReport count_chains(const PointSet& ps, const ChainQuery& q) {
  if (q.pin.mode == PinSpec::Mode::middle) {
    if (q.k() != 1) throw QueryInvalidError("a middle pin only makes sense for k = 1");
    return count_middle_pinned_triples(ps, q.angles.at(0), q.pin.index, q.witness_cap,
                                       q.allow_duplicates);
  }
  if (q.pin.mode == PinSpec::Mode::first) return count_pinned_chains(ps, q);
  const auto planar = [&] {
    auto report = count_triples_planar_fast(ps, q.angles.at(0), std::nullopt, q.witness_cap,
                                            q.allow_duplicates);
    report.distinctness = to_string(q.distinctness);
    return report;
  };
  switch (q.method) {
    case Method::brute:
      return count_chains_bruteforce(ps, q);
    case Method::dp:
      return count_chains_dp(ps, q);
    case Method::planar_fast:
      return planar();
    case Method::auto_select:
      if (q.k() == 1 && ps.dim() == 2 && !(q.angles.at(0).exact_right && ps.has_exact()))
        return planar();
      if (q.distinctness == Distinctness::local && q.witness_cap == 0)
        return count_chains_dp(ps, q);
      return count_chains_bruteforce(ps, q);
  }
  throw QueryInvalidError("unknown method");
}

}  // namespace anglechain
