#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anglechain/angle.hpp"
#include "anglechain/core.hpp"

namespace anglechain {

enum class Distinctness { local, full };
enum class Method { brute, dp, planar_fast, auto_select };

std::string to_string(Distinctness d);
std::string to_string(Method m);

struct PinSpec {
  enum class Mode { none, first, middle };
  Mode mode = Mode::none;
  Index index = 0;

  static PinSpec none() { return {}; }
  static PinSpec first(Index i) { return {Mode::first, i}; }
  static PinSpec middle(Index i) { return {Mode::middle, i}; }
};

/// What to count: an ordered list of target angles (k >= 1), pin mode,
/// distinctness semantics and the counting algorithm.
///
/// Distinctness: `full` requires all k+2 tuple entries pairwise distinct (the
/// reading of "tuples of distinct points"); `local` only requires the three
/// points of every consecutive triple to be distinct, which is what the
/// walk-counting argument needs. Reports always carry the semantics used.
struct ChainQuery {
  std::vector<AngleSpec> angles;
  PinSpec pin;
  Distinctness distinctness = Distinctness::full;
  Method method = Method::auto_select;
  int witness_cap = 0;
  bool allow_duplicates = false;

  int k() const { return static_cast<int>(angles.size()); }
};

struct CountReport {
  BigInt count = 0;
  std::string method;
  std::string distinctness;
  int k = 0;
  Index n = 0;
  double elapsed_s = 0.0;
  std::vector<std::vector<Index>> witnesses;
};

/// Direct enumeration over ordered (k+2)-tuples. The oracle: every other
/// counter is validated against it. Supports both distinctness semantics and
/// first-point pins.
CountReport count_chains_bruteforce(const PointSet& ps, const ChainQuery& q);

/// Walk counting over ordered-pair states: (a,b) -> (b,c) allowed when the
/// triple (a,b,c) matches the step's angle. Exactly the local-distinctness
/// count; O(k n^3) time, O(n^2) big-integer states.
CountReport count_chains_dp(const PointSet& ps, const ChainQuery& q);

/// Planar single-angle counter: for each middle vertex, bucket polar
/// directions of the other points and look up candidate third points at
/// +-angle from each first point, then verify with the shared predicate.
/// O(n^2 log n). With `pin`, counts only triples whose first point is *pin.
CountReport count_triples_planar_fast(const PointSet& ps, const AngleSpec& spec,
                                      std::optional<Index> pin = std::nullopt,
                                      int witness_cap = 0, bool allow_duplicates = false);

/// Chains whose first point is fixed (q.pin must be first(i)); dispatches to
/// the brute or DP path according to q.method / q.distinctness.
CountReport count_pinned_chains(const PointSet& ps, const ChainQuery& q);

/// Ordered pairs (x1, x3), both distinct from the pin, with the target angle
/// at the pin.
CountReport count_middle_pinned_triples(const PointSet& ps, const AngleSpec& spec, Index pin,
                                        int witness_cap = 0, bool allow_duplicates = false);

/// Unordered pairs at the given distance, within an absolute tolerance.
std::int64_t count_pairs_at_distance(const PointSet& ps, double dist,
                                     double tol = kDefaultCosineTol);

struct RichLine {
  Vec direction;               // unit, first nonzero component positive, 1e-9 grid
  Vec anchor;                  // projection of the origin onto the line, 1e-9 grid
  std::vector<Index> members;  // indices of points on the line
};

struct RichLineReport {
  int r = 2;
  std::int64_t line_count = 0;
  std::vector<RichLine> lines;  // filled only when requested
};

/// Lines (in any dimension) containing at least r distinct points of the set,
/// collinear within an absolute tolerance of 1e-9.
RichLineReport count_rich_lines(const PointSet& ps, int r, bool collect_lines = false);

/// Honors q.method, resolving auto_select to planar_fast (k = 1, dim = 2),
/// DP (local) or brute force (full); middle pins route to the middle-pinned
/// counter.
CountReport count_chains(const PointSet& ps, const ChainQuery& q);

}  // namespace anglechain
