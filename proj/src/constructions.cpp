#include "anglechain/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace anglechain {

namespace {

PointSet assemble(Index dim, const std::vector<Vec>& pts) {
  Mat m(dim, static_cast<Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) m.col(static_cast<Index>(i)) = pts[i];
  return PointSet::from_columns(std::move(m));
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

Eigen::Vector2d rotate2(const Eigen::Vector2d& v, double ang) {
  const double c = std::cos(ang), s = std::sin(ang);
  return {c * v.x() - s * v.y(), s * v.x() + c * v.y()};
}

// Interior-vertex check of a sampled designated tuple against the angle list.
void verify_designated_samples(const ConstructionOutput& out) {
  for (const auto& tuple : out.designated_samples) {
    for (std::size_t j = 0; j + 2 < tuple.size(); ++j) {
      const AngleSpec& spec = out.angle_type[std::min(j, out.angle_type.size() - 1)];
      if (!matches_angle(out.points, tuple[j], tuple[j + 1], tuple[j + 2], spec))
        throw InfeasibleError("designated tuple fails its angle check; construction invalid");
    }
  }
}

void check_pairwise_distinct(const PointSet& ps, const std::string& name) {
  for (const auto& issue : validate_pointset(ps)) {
    if (issue.rfind("duplicate", 0) == 0)
      throw InfeasibleError(name + ": " + issue);
  }
}

// ---------------------------------------------------------------------------
// Railroad: points on a fan of lines. Stage s owns the angle pair
// (a_{2s-1}, a_{2s}): each base point w_j on the current line gets a partner
// q_j on the next line along the ray at angle a_{2s-1} from the outward
// direction, placed so that looking back from q_j toward earlier partners
// realizes a_{2s}. Lines pass through the shared anchor whenever
// sin(a_odd - a_even) is safely positive (the concurrent-fan case); otherwise
// the next line is offset so every partner ray still crosses it forward.
// ---------------------------------------------------------------------------

struct RailroadLayout {
  std::vector<Vec> points;                        // 2-d, in emission order
  std::vector<std::vector<Index>> stage_bases;    // [stage][pos] -> global index
  std::vector<std::vector<Index>> stage_partner;  // [stage][pos] -> global index
  int lines = 0;
  bool concurrent_fan = true;
};

RailroadLayout railroad_layout(int m, const std::vector<AngleSpec>& angles,
                               const std::vector<double>& u1) {
  const int k = static_cast<int>(angles.size());
  const int stages = (k + 1) / 2;
  RailroadLayout lay;
  lay.lines = stages + 1;

  Eigen::Vector2d anchor(0.0, 0.0);
  Eigen::Vector2d f(1.0, 0.0);
  std::vector<double> u = u1;  // params of current bases, measured from anchor

  lay.stage_bases.resize(static_cast<std::size_t>(stages) + 1);
  lay.stage_partner.resize(static_cast<std::size_t>(stages) + 1);

  auto& first_line = lay.stage_bases[1];
  for (int j = 0; j < m; ++j) {
    lay.points.emplace_back(anchor + u[static_cast<std::size_t>(j)] * f);
    first_line.push_back(static_cast<Index>(lay.points.size() - 1));
  }

  for (int s = 1; s <= stages; ++s) {
    const double a_odd = angles[static_cast<std::size_t>(2 * s - 2)].radians;
    const bool has_even = (2 * s - 1) < k;
    const double a_even = has_even ? angles[static_cast<std::size_t>(2 * s - 1)].radians : 0.0;
    const auto& bases = lay.stage_bases[static_cast<std::size_t>(s)];
    const int nb = static_cast<int>(bases.size());
    if (nb < 2) throw InfeasibleError("railroad stage ran out of base points");

    const Eigen::Vector2d d = rotate2(f, a_odd);
    const double span = u[static_cast<std::size_t>(nb - 1)] - u[0];

    std::vector<double> t(static_cast<std::size_t>(nb - 1));
    bool fan = false;
    if (has_even) {
      const double theta = a_odd - a_even;
      const double st = std::sin(theta);
      const double se = std::sin(a_even);
      if (st > 1e-3) {
        fan = true;  // next line through the shared anchor, paper-style
        for (int j = 0; j + 1 < nb; ++j)
          t[static_cast<std::size_t>(j)] = u[static_cast<std::size_t>(j)] * st / se;
      } else {
        const double h = 0.5 * (1.0 + span) + span * std::max(0.0, -st) / se;
        for (int j = 0; j + 1 < nb; ++j)
          t[static_cast<std::size_t>(j)] = h + (u[static_cast<std::size_t>(j)] - u[0]) * st / se;
      }
    } else {
      // Final unpaired angle: partners only need to exist, on one extra line
      // transversal to the rays.
      const double co = std::cos(a_odd);
      const double h = 0.5 * (1.0 + span) + span * std::max(0.0, co);
      for (int j = 0; j + 1 < nb; ++j)
        t[static_cast<std::size_t>(j)] = h - (u[static_cast<std::size_t>(j)] - u[0]) * co;
    }
    lay.concurrent_fan = lay.concurrent_fan && (fan || !has_even);

    auto& partners = lay.stage_partner[static_cast<std::size_t>(s)];
    std::vector<Eigen::Vector2d> q(static_cast<std::size_t>(nb - 1));
    for (int j = 0; j + 1 < nb; ++j) {
      const Eigen::Vector2d w = lay.points[static_cast<std::size_t>(bases[static_cast<std::size_t>(j)])];
      q[static_cast<std::size_t>(j)] = w + t[static_cast<std::size_t>(j)] * d;
      lay.points.emplace_back(q[static_cast<std::size_t>(j)]);
      partners.push_back(static_cast<Index>(lay.points.size() - 1));
    }

    if (s < stages) {
      // Partners become the next stage's bases, ordered outward.
      lay.stage_bases[static_cast<std::size_t>(s) + 1] = partners;
      const Eigen::Vector2d fn = (q.back() - q.front()).normalized();
      Eigen::Vector2d next_anchor;
      std::vector<double> un(q.size());
      if (fan) {
        next_anchor = anchor;
      } else {
        const double step = (q.size() > 1) ? (q[1] - q[0]).norm() : 1.0;
        next_anchor = q.front() - (0.5 * step + 1.0) * fn;
      }
      for (std::size_t j = 0; j < q.size(); ++j) un[j] = (q[j] - next_anchor).dot(fn);
      for (std::size_t j = 0; j + 1 < q.size(); ++j) {
        if (!(un[j] > 0.0) || !(un[j] < un[j + 1]))
          throw InfeasibleError("railroad partner ordering collapsed");
      }
      anchor = next_anchor;
      f = fn;
      u = std::move(un);
    }
  }
  return lay;
}

// Designated-chain count of the railroad structure: W[s][p] = completions
// once the chain stands on partner p of stage s (angle 2s-1 consumed).
BigInt railroad_ways(const RailroadLayout& lay, int k, int stage, int pos,
                     std::vector<std::vector<BigInt>>& memo) {
  if (2 * stage - 1 == k) return 1;
  if (2 * stage == k) return pos;  // any earlier partner closes the chain
  auto& row = memo[static_cast<std::size_t>(stage)];
  if (row[static_cast<std::size_t>(pos)] >= 0) return row[static_cast<std::size_t>(pos)];
  const int nb = static_cast<int>(lay.stage_bases[static_cast<std::size_t>(stage)].size());
  // The successor must itself carry a partner on the following line.
  const int limit = std::min(pos - 1, nb - 3);
  BigInt total = 0;
  for (int p2 = 0; p2 <= limit; ++p2)
    total += railroad_ways(lay, k, stage + 1, p2, memo);
  row[static_cast<std::size_t>(pos)] = total;
  return total;
}

void railroad_samples(const RailroadLayout& lay, int k, std::optional<Index> pin_only,
                      std::size_t cap, std::vector<std::vector<Index>>& out) {
  const auto& line1 = lay.stage_bases[1];
  const int m = static_cast<int>(line1.size());
  std::vector<Index> tuple;

  auto emit_from = [&](auto&& self, int stage, int pos) -> void {
    // Invariant: tuple currently ends at partner `pos` of `stage`.
    if (out.size() >= cap) return;
    if (2 * stage - 1 == k) {
      out.push_back(tuple);
      return;
    }
    if (2 * stage == k) {
      for (int p2 = 0; p2 < pos && out.size() < cap; ++p2) {
        tuple.push_back(lay.stage_partner[static_cast<std::size_t>(stage)][static_cast<std::size_t>(p2)]);
        out.push_back(tuple);
        tuple.pop_back();
      }
      return;
    }
    const int nb = static_cast<int>(lay.stage_bases[static_cast<std::size_t>(stage)].size());
    const int limit = std::min(pos - 1, nb - 3);
    for (int p2 = 0; p2 <= limit && out.size() < cap; ++p2) {
      tuple.push_back(lay.stage_partner[static_cast<std::size_t>(stage)][static_cast<std::size_t>(p2)]);
      tuple.push_back(lay.stage_partner[static_cast<std::size_t>(stage) + 1][static_cast<std::size_t>(p2)]);
      self(self, stage + 1, p2);
      tuple.pop_back();
      tuple.pop_back();
    }
  };

  for (int p1 = m - 1; p1 >= 1 && out.size() < cap; --p1) {
    if (pin_only && line1[static_cast<std::size_t>(p1)] != *pin_only) continue;
    for (int p2 = 0; p2 < std::min(p1, m - 1) && out.size() < cap; ++p2) {
      tuple.clear();
      tuple.push_back(line1[static_cast<std::size_t>(p1)]);
      tuple.push_back(line1[static_cast<std::size_t>(p2)]);
      tuple.push_back(lay.stage_partner[1][static_cast<std::size_t>(p2)]);
      emit_from(emit_from, 1, p2);
    }
  }
}

ConstructionOutput build_railroad(int n, const std::vector<AngleSpec>& angles, std::uint64_t seed,
                                  bool pinned) {
  const int k = static_cast<int>(angles.size());
  if (k < 1) throw InvalidParamsError("railroad needs at least one angle");
  if (n < 4 * (k + 2))
    throw InvalidParamsError("railroad needs n >= 4(k+2), got n = " + std::to_string(n));

  const int num_lines = (k + 1) / 2 + 1;
  const int m = n / num_lines;
  if (m < 4) throw InfeasibleError("railroad: too few points per line");

  RailroadLayout lay;
  int attempt = 0;
  for (;; ++attempt) {
    if (attempt > 5)
      throw InfeasibleError("railroad: could not separate coincident points by jitter");
    std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(attempt));
    std::uniform_real_distribution<double> jit(0.0, 0.01);
    std::vector<double> u1(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
      double v = std::pow(1.5, j + 1);
      if (attempt > 0) v *= 1.0 + jit(rng);
      u1[static_cast<std::size_t>(j)] = v;
    }
    lay = railroad_layout(m, angles, u1);

    bool collision = false;
    for (std::size_t i = 0; i < lay.points.size() && !collision; ++i) {
      for (std::size_t j = i + 1; j < lay.points.size() && !collision; ++j) {
        const double scale =
            std::max({1.0, lay.points[i].cwiseAbs().maxCoeff(), lay.points[j].cwiseAbs().maxCoeff()});
        if ((lay.points[i] - lay.points[j]).norm() <= 1e-12 * scale) collision = true;
      }
    }
    if (!collision) break;
  }

  ConstructionOutput out;
  out.points = assemble(2, lay.points);
  out.angle_type = angles;
  out.claimed_exponent = {k / 2 + (pinned ? 1 : 2), 1};

  std::optional<Index> pin;
  if (pinned) {
    pin = lay.stage_bases[1].back();  // outermost first-line point sees all others
    out.points.set_pin(*pin);
  }

  const int stages = (k + 1) / 2;
  std::vector<std::vector<BigInt>> memo(static_cast<std::size_t>(stages) + 1);
  for (int s = 1; s <= stages; ++s)
    memo[static_cast<std::size_t>(s)].assign(lay.stage_bases[static_cast<std::size_t>(s)].size(),
                                             BigInt(-1));
  BigInt floor_count = 0;
  const int nb1 = static_cast<int>(lay.stage_bases[1].size());
  for (int p2 = 0; p2 + 1 < nb1; ++p2) {
    const BigInt ways = railroad_ways(lay, k, 1, p2, memo);
    const BigInt starts = pinned ? BigInt(1) : BigInt(nb1 - 1 - p2);
    floor_count += starts * ways;
  }
  out.designated_floor = floor_count;
  railroad_samples(lay, k, pin, 40, out.designated_samples);

  out.params["m"] = std::to_string(m);
  out.params["lines"] = std::to_string(lay.lines);
  out.params["spacing_ratio"] = "1.5";
  out.params["rotation"] = "ccw";
  out.params["concurrent_fan"] = lay.concurrent_fan ? "true" : "false";
  out.params["seed"] = std::to_string(seed);
  out.params["jitter_attempt"] = std::to_string(attempt);

  check_pairwise_distinct(out.points, "railroad");
  verify_designated_samples(out);
  return out;
}

}  // namespace

ConstructionOutput gen_railroad(int n, const std::vector<AngleSpec>& angles, std::uint64_t seed) {
  return build_railroad(n, angles, seed, false);
}

ConstructionOutput gen_pinned_chain(int n, const std::vector<AngleSpec>& angles,
                                    std::uint64_t seed) {
  return build_railroad(n, angles, seed, true);
}

ConstructionOutput gen_lenz(int n) {
  if (n < 2) throw InvalidParamsError("lenz needs n >= 2");
  const int m_hi = (n + 1) / 2, m_lo = n / 2;
  std::vector<Vec> pts;
  for (int a = 1; a <= m_hi; ++a) {
    Vec p(4);
    p << std::cos(a), std::sin(a), 0.0, 0.0;
    pts.push_back(p);
  }
  for (int a = 1; a <= m_lo; ++a) {
    Vec p(4);
    p << 0.0, 0.0, std::cos(a), std::sin(a);
    pts.push_back(p);
  }

  ConstructionOutput out;
  out.points = assemble(4, pts);
  out.claimed_exponent = {2, 1};
  out.designated_floor = BigInt(m_hi) * m_lo;
  out.params["distance"] = fmt(std::sqrt(2.0));
  out.params["circle_points"] = std::to_string(m_hi);
  out.params["second_circle_points"] = std::to_string(m_lo);
  for (int i = 0; i < std::min(5, m_hi); ++i)
    for (int j = 0; j < std::min(5, m_lo); ++j)
      out.designated_samples.push_back({static_cast<Index>(i), static_cast<Index>(m_hi + j)});
  check_pairwise_distinct(out.points, "lenz");
  return out;
}

ConstructionOutput gen_right_triples_r4(int n) {
  if (n < 3) throw InvalidParamsError("right-triples-r4 needs n >= 3");
  const int m = n / 3;
  std::vector<Vec> pts;
  for (int a = 1; a <= m; ++a) {
    Vec p(4);
    p << -1.0, 0.0, static_cast<double>(a), 0.0;
    pts.push_back(p);
  }
  for (int a = 1; a <= m; ++a) {
    Vec p(4);
    p << std::cos(a), std::sin(a), 0.0, 0.0;
    pts.push_back(p);
  }
  for (int a = 1; a <= m; ++a) {
    Vec p(4);
    p << 1.0, 0.0, 0.0, static_cast<double>(a);
    pts.push_back(p);
  }

  ConstructionOutput out;
  out.points = assemble(4, pts);
  out.claimed_exponent = {3, 1};
  out.angle_type = {AngleSpec::right_angle()};
  out.designated_floor = BigInt(m) * m * m;
  out.params["family_size"] = std::to_string(m);
  for (int i = 0; i < m && out.designated_samples.size() < 30; ++i)
    for (int j = 0; j < m && out.designated_samples.size() < 30; ++j)
      for (int l = 0; l < m && out.designated_samples.size() < 30; ++l)
        out.designated_samples.push_back(
            {static_cast<Index>(i), static_cast<Index>(m + j), static_cast<Index>(2 * m + l)});
  check_pairwise_distinct(out.points, "right-triples-r4");
  verify_designated_samples(out);
  return out;
}

ConstructionOutput gen_right_2chains_r5(int n) {
  if (n < 4) throw InvalidParamsError("right-2chains-r5 needs n >= 4");
  const int m = n / 4;
  std::vector<Vec> pts;
  const auto family = [&](int fam, int a) {
    Vec p(5);
    switch (fam) {
      case 0: p << -1.0, 0.0, static_cast<double>(a), 0.0, 1.0; break;
      case 1: p << std::cos(a), std::sin(a), 0.0, 0.0, 1.0; break;
      case 2: p << 1.0, 0.0, 0.0, std::cos(a), std::sin(a); break;
      default: p << 1.0, 0.0, static_cast<double>(a), 0.0, -1.0; break;
    }
    return p;
  };
  for (int fam = 0; fam < 4; ++fam)
    for (int a = 1; a <= m; ++a) pts.push_back(family(fam, a));

  ConstructionOutput out;
  out.points = assemble(5, pts);
  out.claimed_exponent = {4, 1};
  out.angle_type = {AngleSpec::right_angle(), AngleSpec::right_angle()};
  out.designated_floor = BigInt(m) * m * m * m;
  out.params["family_size"] = std::to_string(m);
  for (int i = 0; i < m && out.designated_samples.size() < 30; ++i)
    for (int j = 0; j < m && out.designated_samples.size() < 30; ++j)
      out.designated_samples.push_back({static_cast<Index>(i), static_cast<Index>(m + i),
                                        static_cast<Index>(2 * m + j), static_cast<Index>(3 * m + j)});
  // The right-angle identities at the two interior families hold for every
  // parameter value; check them all once before emitting.
  for (int a = 1; a <= m; ++a) {
    if (!matches_angle(out.points, 0, static_cast<Index>(m + a - 1), static_cast<Index>(2 * m),
                       out.angle_type[0]))
      throw InfeasibleError("right-2chains-r5: interior angle identity failed at x2");
    if (!matches_angle(out.points, static_cast<Index>(m), static_cast<Index>(2 * m + a - 1),
                       static_cast<Index>(3 * m), out.angle_type[1]))
      throw InfeasibleError("right-2chains-r5: interior angle identity failed at x3");
  }
  check_pairwise_distinct(out.points, "right-2chains-r5");
  verify_designated_samples(out);
  return out;
}

ConstructionOutput gen_right_kchains_r6(int n, int k, bool pinned) {
  if (n < 6) throw InvalidParamsError("right-kchains-r6 needs n >= 6");
  if (k < 1) throw InvalidParamsError("right-kchains-r6 needs k >= 1");
  const int m = n / 6;
  std::vector<Vec> pts;
  Index pin_index = 0;

  const auto unpinned_family = [&](int fam, int a) {
    const double c = std::cos(a), s = std::sin(a);
    Vec p(6);
    switch (fam) {
      case 0: p << -1.0, 0.0, 1.0, 0.0, c, s; break;
      case 1: p << c, s, 1.0, 0.0, 1.0, 0.0; break;
      case 2: p << 1.0, 0.0, c, s, 1.0, 0.0; break;
      case 3: p << 1.0, 0.0, -1.0, 0.0, c, s; break;
      case 4: p << c, s, -1.0, 0.0, -1.0, 0.0; break;
      default: p << -1.0, 0.0, c, s, -1.0, 0.0; break;
    }
    return p;
  };
  const auto pinned_family = [&](int fam, int a) {
    const double c = 1.0 + std::cos(a), s = std::sin(a);
    Vec p(6);
    switch (fam) {
      case 0: p << 0.0, 0.0, 2.0, 0.0, c, s; break;
      case 1: p << c, s, 2.0, 0.0, 2.0, 0.0; break;
      case 2: p << 2.0, 0.0, c, s, 2.0, 0.0; break;
      case 3: p << 2.0, 0.0, 0.0, 0.0, c, s; break;
      case 4: p << c, s, 0.0, 0.0, 0.0, 0.0; break;
      default: p << 0.0, 0.0, c, s, 0.0, 0.0; break;
    }
    return p;
  };

  if (pinned) pts.push_back(Vec::Zero(6));
  for (int fam = 0; fam < 6; ++fam)
    for (int a = 1; a <= m; ++a)
      pts.push_back(pinned ? pinned_family(fam, a) : unpinned_family(fam, a));

  ConstructionOutput out;
  out.points = assemble(6, pts);
  if (pinned) out.points.set_pin(pin_index);
  out.claimed_exponent = {k + (pinned ? 1 : 2), 1};
  out.angle_type.assign(static_cast<std::size_t>(k), AngleSpec::right_angle());
  BigInt floor_count = 1;
  const int free_positions = pinned ? (k + 1) : (k + 2);
  for (int t = 0; t < free_positions; ++t) floor_count *= m;
  out.designated_floor = floor_count;
  out.params["family_size"] = std::to_string(m);
  out.params["pinned"] = pinned ? "true" : "false";

  const Index base = pinned ? 1 : 0;
  const auto family_point = [&](int fam, int a) {
    return base + static_cast<Index>(fam) * m + static_cast<Index>(a);
  };
  // Cycle through the families; vary the parameter to cover several tuples.
  for (int shift = 0; shift < std::min(m, 5); ++shift) {
    std::vector<Index> tuple;
    if (pinned) tuple.push_back(pin_index);
    for (int t = 0; t < free_positions; ++t)
      tuple.push_back(family_point(t % 6, (t + shift) % m));
    out.designated_samples.push_back(std::move(tuple));
  }
  check_pairwise_distinct(out.points, "right-kchains-r6");
  verify_designated_samples(out);
  return out;
}

ConstructionOutput gen_acute_kchains_r6(int n, int k, const std::vector<double>& c_in,
                                        bool pinned) {
  if (k < 1) throw InvalidParamsError("acute-kchains-r6 needs k >= 1");
  if (n < k + 2) throw InvalidParamsError("acute-kchains-r6 needs n >= k + 2");
  const int families = k + 2;

  std::vector<double> c;
  if (c_in.size() == 1) {
    c.assign(static_cast<std::size_t>(families), c_in[0]);
    if (pinned) c[0] = 0.0;
  } else if (static_cast<int>(c_in.size()) == families) {
    c = c_in;
  } else {
    throw InvalidParamsError("c must have one entry or k + 2 entries");
  }
  for (int i = 0; i < families; ++i) {
    const bool zero_ok = pinned && i == 0;
    if (zero_ok) {
      if (c[static_cast<std::size_t>(i)] != 0.0)
        throw InvalidParamsError("pinned acute family requires c_1 = 0");
    } else if (!(c[static_cast<std::size_t>(i)] > 0.0)) {
      throw InvalidParamsError("c_" + std::to_string(i + 1) + " must be positive");
    }
  }

  // alpha_i at vertex x_{i+1}; beta_i the lower end of its attainable range.
  std::vector<AngleSpec> alphas;
  std::vector<double> betas;
  for (int i = 1; i <= k; ++i) {
    const double ci = c[static_cast<std::size_t>(i - 1)];
    const double cm = c[static_cast<std::size_t>(i)];
    const double cp = c[static_cast<std::size_t>(i + 1)];
    const double cosv = cm * cm / (std::sqrt(ci * ci + cm * cm) * std::sqrt(cp * cp + cm * cm));
    alphas.push_back(AngleSpec::from_radians(std::acos(cosv)));
    betas.push_back(std::acos(cm / std::sqrt(ci * ci + cm * cm)));
  }

  const int first_fam = pinned ? 1 : 0;
  const int real_families = families - first_fam;
  const int m = pinned ? (n / (k + 1)) : (n / families);
  if (m < 1) throw InvalidParamsError("n too small for the requested k");

  std::vector<Vec> pts;
  if (pinned) pts.push_back(Vec::Zero(6));
  // Families whose circles share a coordinate plane (index classes mod 3) get
  // disjoint parameter ranges so all points stay pairwise distinct.
  std::vector<int> class_offset(3, 0);
  std::vector<Index> family_start(static_cast<std::size_t>(families), 0);
  for (int i = first_fam; i < families; ++i) {
    const int cls = i % 3;
    const int off = class_offset[static_cast<std::size_t>(cls)];
    class_offset[static_cast<std::size_t>(cls)] += m;
    family_start[static_cast<std::size_t>(i)] = static_cast<Index>(pts.size());
    for (int a = 1; a <= m; ++a) {
      Vec p = Vec::Zero(6);
      const double arg = static_cast<double>(off + a);
      p(2 * cls) = c[static_cast<std::size_t>(i)] * std::cos(arg);
      p(2 * cls + 1) = c[static_cast<std::size_t>(i)] * std::sin(arg);
      pts.push_back(p);
    }
  }

  ConstructionOutput out;
  out.points = assemble(6, pts);
  if (pinned) out.points.set_pin(0);
  out.claimed_exponent = {k + (pinned ? 1 : 2), 1};
  out.angle_type = alphas;
  BigInt floor_count = 1;
  for (int t = 0; t < real_families; ++t) floor_count *= m;
  out.designated_floor = floor_count;
  out.params["family_size"] = std::to_string(m);
  out.params["pinned"] = pinned ? "true" : "false";
  for (int i = 0; i < families; ++i)
    out.params["c" + std::to_string(i + 1)] = fmt(c[static_cast<std::size_t>(i)]);
  for (int i = 1; i <= k; ++i)
    out.params["beta" + std::to_string(i)] = fmt(betas[static_cast<std::size_t>(i - 1)]);

  for (int shift = 0; shift < std::min(m, 5); ++shift) {
    std::vector<Index> tuple;
    if (pinned) tuple.push_back(0);
    for (int i = first_fam; i < families; ++i) {
      const int a = (shift + i) % m;
      tuple.push_back(family_start[static_cast<std::size_t>(i)] + static_cast<Index>(a));
    }
    out.designated_samples.push_back(std::move(tuple));
  }
  check_pairwise_distinct(out.points, "acute-kchains-r6");
  verify_designated_samples(out);
  return out;
}

ConstructionOutput gen_middle_pinned(int n, const AngleSpec& spec, int dim) {
  if (n < 3) throw InvalidParamsError("middle-pinned needs n >= 3");
  if (dim < 2) throw InvalidParamsError("middle-pinned needs dim >= 2");
  const int m_lo = (n - 1) / 2;
  const int m_hi = (n - 1) - m_lo;

  std::vector<Vec> pts;
  pts.push_back(Vec::Zero(dim));  // the shared middle point
  for (int a = 1; a <= m_hi; ++a) {
    Vec p = Vec::Zero(dim);
    p(0) = static_cast<double>(a);
    pts.push_back(p);
  }
  for (int a = 1; a <= m_lo; ++a) {
    Vec p = Vec::Zero(dim);
    p(0) = a * std::cos(spec.radians);
    p(1) = a * std::sin(spec.radians);
    pts.push_back(p);
  }

  ConstructionOutput out;
  out.points = assemble(dim, pts);
  out.points.set_pin(0);
  out.claimed_exponent = {2, 1};
  out.angle_type = {spec};
  out.designated_floor = BigInt(2) * m_hi * m_lo;
  out.params["ray_points"] = std::to_string(m_hi) + "+" + std::to_string(m_lo);
  for (int i = 1; i <= std::min(3, m_hi); ++i)
    for (int j = 1; j <= std::min(3, m_lo); ++j) {
      out.designated_samples.push_back({static_cast<Index>(i), 0, static_cast<Index>(m_hi + j)});
      out.designated_samples.push_back({static_cast<Index>(m_hi + j), 0, static_cast<Index>(i)});
    }
  check_pairwise_distinct(out.points, "middle-pinned");
  verify_designated_samples(out);
  return out;
}

ConstructionOutput gen_pinned_st(int n, const AngleSpec& spec) {
  int m = 0;
  while (static_cast<long long>(m + 1) * (m + 1) * (m + 1) <= n) ++m;
  if (m < 2) throw InfeasibleError("pinned-st needs n with floor(n^(1/3)) >= 2");

  std::vector<Vec> pts;
  pts.push_back(Vec::Zero(2));  // the pin
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m * m; ++b) {
      Vec p(2);
      p << static_cast<double>(a), static_cast<double>(b);
      pts.push_back(p);
    }
  const Index grid_count = static_cast<Index>(pts.size()) - 1;

  // Pivots: on the line y = ax + b, the (at most two) points from which the
  // origin direction makes the target angle with the line.
  const double cot = (spec.cosine == 0.0) ? 0.0 : spec.cosine / std::sin(spec.radians);
  std::set<std::pair<long long, long long>> seen;
  const auto snap_key = [](const Vec& p) {
    return std::make_pair(static_cast<long long>(std::llround(p(0) * 1e9)),
                          static_cast<long long>(std::llround(p(1) * 1e9)));
  };
  for (const Vec& p : pts) seen.insert(snap_key(p));

  int line_count = 0;
  int pivot_count = 0;
  const int b_max = std::max(1, m * m / 2);
  for (int a = 1; a <= m; ++a) {
    for (int b = 1; b <= b_max; ++b) {
      ++line_count;
      Vec dir(2);
      dir << 1.0, static_cast<double>(a);
      dir.normalize();
      Vec anchor(2);
      anchor << 0.0, static_cast<double>(b);
      const double proj = anchor.dot(dir);
      const double dist = b / std::sqrt(1.0 + static_cast<double>(a) * a);
      const double t_hi = -proj + cot * dist;
      const double t_lo = -proj - cot * dist;
      for (const double t : {t_hi, t_lo}) {
        const Vec q = anchor + t * dir;
        if (!seen.insert(snap_key(q)).second) continue;  // coincides with a kept point
        pts.push_back(q);
        ++pivot_count;
        if (cot == 0.0) break;  // single pivot for the right angle
      }
    }
  }

  ConstructionOutput out;
  out.points = assemble(2, pts);
  out.points.set_pin(0);
  out.claimed_exponent = {4, 3};
  out.angle_type = {spec};
  out.params["m"] = std::to_string(m);
  out.params["lines"] = std::to_string(line_count);
  out.params["grid_points"] = std::to_string(grid_count);
  out.params["pivots"] = std::to_string(pivot_count);

  // Count the designated (origin, pivot, grid-point-on-line) triples directly.
  BigInt floor_count = 0;
  for (Index qi = 1 + grid_count; qi < out.points.size(); ++qi) {
    for (Index pi = 1; pi <= grid_count; ++pi) {
      // Same line: grid point (x, ax+b) vs pivot q on y = ax + b.
      const Vec q = out.points.point(qi);
      const Vec p = out.points.point(pi);
      bool on_common_line = false;
      for (int a = 1; a <= m && !on_common_line; ++a) {
        const double b1 = q(1) - a * q(0);
        const double b2 = p(1) - a * p(0);
        on_common_line = std::abs(b1 - b2) < 1e-6 && b2 >= 0.5 && b2 <= b_max + 0.5 &&
                         std::abs(b2 - std::round(b2)) < 1e-6;
      }
      if (!on_common_line) continue;
      double cosv = 0.0;
      if (!try_angle_cosine(out.points, 0, qi, pi, cosv)) continue;
      if (std::abs(cosv - spec.cosine) <= spec.tol) {
        floor_count += 1;
        if (out.designated_samples.size() < 40) out.designated_samples.push_back({0, qi, pi});
      }
    }
  }
  out.designated_floor = floor_count;
  check_pairwise_distinct(out.points, "pinned-st");
  verify_designated_samples(out);
  return out;
}

ConstructionOutput gen_pinned_right_r3(int n) {
  if (n < 2) throw InvalidParamsError("pinned-right-r3 needs n >= 2");
  const int m = n / 2;
  std::vector<Vec> pts;
  pts.push_back(Vec::Zero(3));
  for (int i = 1; i <= m; ++i) {
    Vec p(3);
    p << 1.0 + std::cos(i), std::sin(i), 0.0;
    pts.push_back(p);
  }
  for (int j = 1; j <= m; ++j) {
    Vec p(3);
    p << 2.0, 0.0, static_cast<double>(j);
    pts.push_back(p);
  }

  ConstructionOutput out;
  out.points = assemble(3, pts);
  out.points.set_pin(0);
  out.claimed_exponent = {2, 1};
  out.angle_type = {AngleSpec::right_angle()};
  out.designated_floor = BigInt(m) * m;
  out.params["circle_points"] = std::to_string(m);
  out.params["line_points"] = std::to_string(m);
  for (int i = 1; i <= m && out.designated_samples.size() < 40; ++i)
    for (int j = 1; j <= m && out.designated_samples.size() < 40; ++j)
      out.designated_samples.push_back({0, static_cast<Index>(i), static_cast<Index>(m + j)});
  check_pairwise_distinct(out.points, "pinned-right-r3");
  verify_designated_samples(out);
  return out;
}

ConstructionOutput make_construction(const ConstructionRequest& req) {
  const std::string& name = req.name;
  if (name == "railroad") return gen_railroad(req.n, req.angles, req.seed);
  if (name == "pinned-chain") return gen_pinned_chain(req.n, req.angles, req.seed);
  if (name == "lenz") return gen_lenz(req.n);
  if (name == "right-triples-r4") return gen_right_triples_r4(req.n);
  if (name == "right-2chains-r5") return gen_right_2chains_r5(req.n);
  if (name == "right-kchains-r6") return gen_right_kchains_r6(req.n, req.k, req.pinned);
  if (name == "acute-kchains-r6") {
    const std::vector<double> c = req.c.empty() ? std::vector<double>{1.0} : req.c;
    return gen_acute_kchains_r6(req.n, req.k, c, req.pinned);
  }
  if (name == "middle-pinned") {
    if (req.angles.empty()) throw InvalidParamsError("middle-pinned needs an angle");
    return gen_middle_pinned(req.n, req.angles[0], req.dim);
  }
  if (name == "pinned-st") {
    if (req.angles.empty()) throw InvalidParamsError("pinned-st needs an angle");
    return gen_pinned_st(req.n, req.angles[0]);
  }
  if (name == "pinned-right-r3") return gen_pinned_right_r3(req.n);
  throw InvalidParamsError("unknown construction '" + name + "'");
}

std::vector<std::string> construction_names() {
  return {"railroad",         "pinned-chain",     "lenz",
          "right-triples-r4", "right-2chains-r5", "right-kchains-r6",
          "acute-kchains-r6", "middle-pinned",    "pinned-st",
          "pinned-right-r3"};
}

}  // namespace anglechain
