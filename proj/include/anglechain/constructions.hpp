#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "anglechain/angle.hpp"
#include "anglechain/core.hpp"

namespace anglechain {

/// A generated extremal configuration together with the growth exponent its
/// family realizes, the angle type it is built for, and a floor on the number
/// of designated chains (counted from the construction itself, so tests can
/// assert counter >= floor without re-deriving the combinatorics).
struct ConstructionOutput {
  PointSet points{2};
  std::pair<long, long> claimed_exponent{0, 1};  // numerator / denominator
  std::vector<AngleSpec> angle_type;
  std::map<std::string, std::string> params;
  BigInt designated_floor = 0;
  // A deterministic sample of designated chains (index tuples, pin included
  // as the first entry where the family is pinned), capped in size.
  std::vector<std::vector<Index>> designated_samples;
};

/// Points on a fan of ceil(k/2)+1 lines realizing ~ n^(floor(k/2)+2) chains of
/// the given type. Stage s places partner points for the current line's
/// points so that the angle pair (a_{2s-1}, a_{2s}) is met along the next
/// line; geometric spacing keeps the per-line order "away from the origin".
ConstructionOutput gen_railroad(int n, const std::vector<AngleSpec>& angles,
                                std::uint64_t seed = 0);

/// Two orthogonal unit circles in R^4; every cross pair is at distance
/// sqrt(2), giving ceil(n/2)*floor(n/2) equal-distance pairs.
ConstructionOutput gen_lenz(int n);

/// Three coordinate families in R^4 with every cross triple a right angle at
/// the middle family: ~ (n/3)^3 right triples.
ConstructionOutput gen_right_triples_r4(int n);

/// Four families in R^5 forming ~ (n/4)^4 right-angle 2-chains.
ConstructionOutput gen_right_2chains_r5(int n);

/// Six cyclic coordinate families in R^6; every triple of consecutive
/// families (indices mod 6) meets at a right angle, so k-chains number
/// ~ (n/6)^(k+2). The pinned variant prepends the origin, from which chains
/// of length k+1 into the families start: ~ (n/6)^(k+1).
ConstructionOutput gen_right_kchains_r6(int n, int k, bool pinned);

/// Families on circles of radii c_i in rotating coordinate planes of R^6.
/// The realized angles are derived from c (alpha_i depends on c_i, c_{i+1},
/// c_{i+2}); c_1 = 0 collapses x_1 to the origin and pins the family.
ConstructionOutput gen_acute_kchains_r6(int n, int k, const std::vector<double>& c, bool pinned);

/// A vertex (the pin) with half the points on each of two rays meeting at the
/// target angle: 2 * floor((n-1)/2) * ceil((n-1)/2) middle-pinned triples.
ConstructionOutput gen_middle_pinned(int n, const AngleSpec& spec, int dim);

/// Grid-and-lines sharpness configuration for pinned single angles: grid P of
/// m x m^2 lattice points, the line family y = ax + b, and on each line the
/// pivot points from which the origin subtends the target angle. Pinned
/// count grows like n^(4/3).
ConstructionOutput gen_pinned_st(int n, const AngleSpec& spec);

/// Circle points (1+cos i, sin i, 0) and line points (2, 0, j) in R^3: every
/// (origin, circle, line) triple is a right angle at the circle point,
/// giving floor(n/2)^2 pinned right angles.
ConstructionOutput gen_pinned_right_r3(int n);

/// The railroad anchored at its outermost first-line point, which serves as
/// the pinned chain start: ~ n^(floor(k/2)+1) pinned chains.
ConstructionOutput gen_pinned_chain(int n, const std::vector<AngleSpec>& angles,
                                    std::uint64_t seed = 0);

/// Name-keyed construction dispatch used by the CLI and the sweep driver.
struct ConstructionRequest {
  std::string name;
  int n = 0;
  int k = 1;
  int dim = 2;  // middle-pinned embedding dimension
  std::vector<AngleSpec> angles;
  std::vector<double> c;
  bool pinned = false;
  std::uint64_t seed = 0;
};

ConstructionOutput make_construction(const ConstructionRequest& req);

std::vector<std::string> construction_names();

}  // namespace anglechain
