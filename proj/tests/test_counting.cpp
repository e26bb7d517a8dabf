#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "anglechain/constructions.hpp"
#include "anglechain/counting.hpp"
#include "test_util.hpp"

using namespace anglechain;

namespace {

constexpr double kPi = std::numbers::pi;

ChainQuery chains(std::vector<AngleSpec> angles, Distinctness d, Method m) {
  ChainQuery q;
  q.angles = std::move(angles);
  q.distinctness = d;
  q.method = m;
  return q;
}

// Independent collinearity oracle: gather the member set of every pair's line
// and count the distinct sets with at least r distinct points.
std::int64_t rich_lines_oracle(const PointSet& ps, int r) {
  const Index n = ps.size();
  std::set<std::vector<Index>> lines;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (ps.point(i) == ps.point(j)) continue;
      const Vec dir = (ps.point(j) - ps.point(i)).normalized();
      std::vector<Index> members;
      int distinct = 0;
      for (Index t = 0; t < n; ++t) {
        const Vec v = ps.point(t) - ps.point(i);
        if ((v - v.dot(dir) * dir).norm() <= 1e-9) {
          bool repeat = false;
          for (Index prev : members)
            if (ps.point(prev) == ps.point(t)) repeat = true;
          members.push_back(t);
          if (!repeat) ++distinct;
        }
      }
      if (distinct >= r) lines.insert(members);
    }
  }
  return static_cast<std::int64_t>(lines.size());
}

}  // namespace

TEST_SUITE_BEGIN("counting");

TEST_CASE("unit square right-angle chains") {
  const auto square = testutil::unit_square();
  const std::vector<AngleSpec> right{AngleSpec::right_angle()};

  SUBCASE("k = 1: eight ordered corner triples") {
    CHECK(count_chains_bruteforce(square, chains(right, Distinctness::full, Method::brute)).count ==
          8);
    CHECK(count_chains_dp(square, chains(right, Distinctness::local, Method::dp)).count == 8);
    CHECK(count_triples_planar_fast(square, right[0]).count == 8);
  }
  SUBCASE("longer chains walk around the square") {
    for (int k = 2; k <= 5; ++k) {
      const std::vector<AngleSpec> specs(static_cast<std::size_t>(k), AngleSpec::right_angle());
      const auto local =
          count_chains_bruteforce(square, chains(specs, Distinctness::local, Method::brute));
      const auto dp = count_chains_dp(square, chains(specs, Distinctness::local, Method::dp));
      CHECK(local.count == 8);
      CHECK(dp.count == 8);
      const auto full =
          count_chains_bruteforce(square, chains(specs, Distinctness::full, Method::brute));
      // Only four distinct points exist, so fully distinct tuples die at k >= 3.
      CHECK(full.count == (k == 2 ? 8 : 0));
    }
  }
}

TEST_CASE("three-point set under local semantics") {
  Mat m(2, 3);
  m << 0, 1, 0,
       0, 0, 1;
  const auto ps = PointSet::from_columns(m);
  const std::vector<AngleSpec> specs{AngleSpec::from_radians(kPi / 4),
                                     AngleSpec::from_radians(kPi / 4)};
  const auto brute = count_chains_bruteforce(ps, chains(specs, Distinctness::local, Method::brute));
  const auto dp = count_chains_dp(ps, chains(specs, Distinctness::local, Method::dp));
  CHECK(brute.count == dp.count);
  CHECK(brute.count == 2);  // (P0,P1,P2,P0) and (P0,P2,P1,P0)
  // Under full distinctness a 4-tuple needs four distinct points.
  CHECK(count_chains_bruteforce(ps, chains(specs, Distinctness::full, Method::brute)).count == 0);
}

TEST_CASE("collinear sets admit no interior angles") {
  Mat m(2, 5);
  m << 0, 1, 2, 3, 4,
       0, 0, 0, 0, 0;
  const auto line = PointSet::from_columns(m);
  for (const double a : {kPi / 3, kPi / 2, 2.9}) {
    const std::vector<AngleSpec> specs{AngleSpec::from_radians(a)};
    CHECK(count_chains_bruteforce(line, chains(specs, Distinctness::full, Method::brute)).count ==
          0);
    CHECK(count_chains_dp(line, chains(specs, Distinctness::local, Method::dp)).count == 0);
  }
}

TEST_CASE("walk counter equals brute force on random sets") {
  std::mt19937_64 rng(314);
  std::uniform_int_distribution<int> pick_n(5, 8), pick_d(2, 3), pick_k(1, 3);
  std::uniform_real_distribution<double> pick_alpha(0.15, kPi - 0.15);
  for (int trial = 0; trial < 25; ++trial) {
    const auto ps = testutil::random_pointset(9000 + static_cast<std::uint64_t>(trial),
                                              pick_n(rng), pick_d(rng));
    const int k = pick_k(rng);
    std::vector<AngleSpec> specs;
    for (int i = 0; i < k; ++i) specs.push_back(AngleSpec::from_radians(pick_alpha(rng)));
    const auto brute =
        count_chains_bruteforce(ps, chains(specs, Distinctness::local, Method::brute));
    const auto dp = count_chains_dp(ps, chains(specs, Distinctness::local, Method::dp));
    CHECK(brute.count == dp.count);
  }
}

TEST_CASE("planar fast counter equals brute force") {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> pick_alpha(0.15, kPi - 0.15);

  SUBCASE("points on a circle, random angles") {
    for (int trial = 0; trial < 10; ++trial) {
      Mat m(2, 10);
      std::uniform_real_distribution<double> pick_t(0.0, 2 * kPi);
      for (Index i = 0; i < 10; ++i) {
        const double t = pick_t(rng);
        m(0, i) = std::cos(t);
        m(1, i) = std::sin(t);
      }
      const auto ps = PointSet::from_columns(m);
      const AngleSpec spec = AngleSpec::from_radians(pick_alpha(rng));
      const auto fast = count_triples_planar_fast(ps, spec);
      const auto brute =
          count_chains_bruteforce(ps, chains({spec}, Distinctness::full, Method::brute));
      CHECK(fast.count == brute.count);
    }
  }
  SUBCASE("random boxes, right angle included") {
    for (int trial = 0; trial < 8; ++trial) {
      const auto ps =
          testutil::random_pointset(500 + static_cast<std::uint64_t>(trial), 60, 2, -3.0, 3.0);
      const AngleSpec spec =
          (trial % 2 == 0) ? AngleSpec::right_angle() : AngleSpec::from_radians(pick_alpha(rng));
      CHECK(count_triples_planar_fast(ps, spec).count ==
            count_chains_bruteforce(ps, chains({spec}, Distinctness::full, Method::brute)).count);
    }
  }
  SUBCASE("pinned mode matches pinned brute force") {
    const auto out = gen_pinned_st(64, AngleSpec::from_radians(kPi / 3));
    const Index pin = *out.points.pin();
    ChainQuery q = chains({AngleSpec::from_radians(kPi / 3)}, Distinctness::full, Method::brute);
    q.pin = PinSpec::first(pin);
    const auto brute = count_chains_bruteforce(out.points, q);
    const auto fast = count_triples_planar_fast(out.points, q.angles[0], pin);
    CHECK(fast.count == brute.count);
    CHECK(fast.count >= out.designated_floor);
  }
}

TEST_CASE("pinned chain counting") {
  SUBCASE("square pinned at a corner") {
    const auto square = testutil::unit_square();  // corner 0 is (0,0)
    ChainQuery q = chains({AngleSpec::right_angle()}, Distinctness::full, Method::brute);
    q.pin = PinSpec::first(0);
    CHECK(count_pinned_chains(square, q).count == 2);
  }
  SUBCASE("circle-and-line configuration") {
    const auto out = gen_pinned_right_r3(10);
    ChainQuery q = chains({AngleSpec::right_angle()}, Distinctness::full, Method::brute);
    q.pin = PinSpec::first(*out.points.pin());
    const auto report = count_pinned_chains(out.points, q);
    CHECK(report.count >= 25);
    // DP with the pinned start agrees on the local count.
    ChainQuery qd = chains({AngleSpec::right_angle()}, Distinctness::local, Method::dp);
    qd.pin = q.pin;
    const auto local = count_pinned_chains(out.points, qd);
    ChainQuery qb = chains({AngleSpec::right_angle()}, Distinctness::local, Method::brute);
    qb.pin = q.pin;
    CHECK(local.count == count_chains_bruteforce(out.points, qb).count);
  }
  SUBCASE("no triple can start at a point collinear with the rest") {
    Mat m(2, 5);
    m << 0, 1, 2, 3, 4,
         0, 0, 0, 0, 0;
    auto line = PointSet::from_columns(m);
    ChainQuery q = chains({AngleSpec::from_radians(1.0)}, Distinctness::full, Method::brute);
    q.pin = PinSpec::first(0);
    CHECK(count_pinned_chains(line, q).count == 0);
  }
}

TEST_CASE("middle-pinned triples") {
  SUBCASE("two rays at the target angle") {
    const auto out = gen_middle_pinned(11, AngleSpec::from_radians(kPi / 3), 2);
    CHECK(count_middle_pinned_triples(out.points, AngleSpec::from_radians(kPi / 3),
                                      *out.points.pin())
              .count == 50);
  }
  SUBCASE("square pinned at a corner") {
    const auto square = testutil::unit_square();
    CHECK(count_middle_pinned_triples(square, AngleSpec::right_angle(), 0).count == 2);
  }
  SUBCASE("a single ray sees no cross pairs") {
    Mat m(2, 4);
    m << 0, 1, 2, 3,
         0, 1, 2, 3;
    const auto ray = PointSet::from_columns(m);
    CHECK(count_middle_pinned_triples(ray, AngleSpec::from_radians(2.0), 0).count == 0);
  }
  SUBCASE("routing through the query interface") {
    const auto out = gen_middle_pinned(9, AngleSpec::from_radians(kPi / 4), 3);
    ChainQuery q = chains({AngleSpec::from_radians(kPi / 4)}, Distinctness::full, Method::brute);
    q.pin = PinSpec::middle(*out.points.pin());
    CHECK(count_chains(out.points, q).count == 2 * 4 * 4);
  }
}

TEST_CASE("pairs at a fixed distance") {
  CHECK(count_pairs_at_distance(gen_lenz(10).points, std::sqrt(2.0)) == 25);
  CHECK(count_pairs_at_distance(gen_lenz(100).points, std::sqrt(2.0)) == 2500);
  Mat m(2, 2);
  m << 0, 1,
       0, 0;
  CHECK(count_pairs_at_distance(PointSet::from_columns(m), 1.0) == 1);
  CHECK_THROWS_AS(count_pairs_at_distance(testutil::unit_square(), 0.0), InvalidParamsError);
}

TEST_CASE("rich lines") {
  SUBCASE("three collinear points form one line") {
    Mat m(2, 3);
    m << 0, 1, 2,
         0, 1, 2;
    CHECK(count_rich_lines(PointSet::from_columns(m), 2).line_count == 1);
  }
  SUBCASE("3x3 grid") {
    Mat m(2, 9);
    int c = 0;
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        m(0, c) = x;
        m(1, c) = y;
        ++c;
      }
    const auto grid = PointSet::from_columns(m);
    CHECK(count_rich_lines(grid, 3).line_count == 8);   // rows, columns, diagonals
    CHECK(count_rich_lines(grid, 2).line_count == 20);  // plus twelve 2-point lines
    const auto detailed = count_rich_lines(grid, 3, true);
    REQUIRE(detailed.lines.size() == 8);
    for (const auto& line : detailed.lines) CHECK(line.members.size() >= 3);
  }
  SUBCASE("near-grid sets match the oracle") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> jitter(-1e-4, 1e-4);
    std::bernoulli_distribution flip(0.5);
    for (int trial = 0; trial < 10; ++trial) {
      Mat m(2, 25);
      int c = 0;
      for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) {
          m(0, c) = x + (flip(rng) ? jitter(rng) : 0.0);
          m(1, c) = y + (flip(rng) ? jitter(rng) : 0.0);
          ++c;
        }
      const auto ps = PointSet::from_columns(m);
      for (const int r : {2, 3, 4}) {
        CHECK(count_rich_lines(ps, r).line_count == rich_lines_oracle(ps, r));
      }
    }
  }
  SUBCASE("duplicate coordinates collapse") {
    Mat m(2, 4);
    m << 0, 1, 2, 2,
         0, 0, 0, 0;
    CHECK(count_rich_lines(PointSet::from_columns(m), 3).line_count == 1);
  }
  CHECK_THROWS_AS(count_rich_lines(testutil::unit_square(), 1), InvalidParamsError);
}

TEST_CASE("reversal symmetry") {
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> pick_alpha(0.2, kPi - 0.2);
  for (int trial = 0; trial < 8; ++trial) {
    const auto ps = testutil::random_pointset(7100 + static_cast<std::uint64_t>(trial), 7, 2);
    std::vector<AngleSpec> specs{AngleSpec::from_radians(pick_alpha(rng)),
                                 AngleSpec::from_radians(pick_alpha(rng)),
                                 AngleSpec::from_radians(pick_alpha(rng))};
    std::vector<AngleSpec> rev(specs.rbegin(), specs.rend());
    for (const auto d : {Distinctness::local, Distinctness::full}) {
      CHECK(count_chains_bruteforce(ps, chains(specs, d, Method::brute)).count ==
            count_chains_bruteforce(ps, chains(rev, d, Method::brute)).count);
    }
  }
}

TEST_CASE("full-distinctness count never exceeds local") {
  for (int trial = 0; trial < 6; ++trial) {
    const auto ps = testutil::random_pointset(8800 + static_cast<std::uint64_t>(trial), 8, 2);
    const std::vector<AngleSpec> specs{AngleSpec::from_radians(0.9),
                                       AngleSpec::from_radians(1.7)};
    const auto full = count_chains_bruteforce(ps, chains(specs, Distinctness::full, Method::brute));
    const auto local =
        count_chains_bruteforce(ps, chains(specs, Distinctness::local, Method::brute));
    CHECK(full.count <= local.count);
  }
}

TEST_CASE("adding a point never decreases a count") {
  std::mt19937_64 rng(5150);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  for (int trial = 0; trial < 6; ++trial) {
    auto ps = testutil::random_pointset(31000 + static_cast<std::uint64_t>(trial), 8, 2);
    const std::vector<AngleSpec> specs{AngleSpec::from_radians(1.1)};
    const auto before =
        count_chains_bruteforce(ps, chains(specs, Distinctness::full, Method::brute)).count;
    Vec extra(2);
    extra << coord(rng), coord(rng);
    ps.append(extra);
    const auto after =
        count_chains_bruteforce(ps, chains(specs, Distinctness::full, Method::brute)).count;
    CHECK(after >= before);
  }
}

TEST_CASE("counts are invariant under similarity") {
  for (int trial = 0; trial < 6; ++trial) {
    const auto ps =
        testutil::random_pointset(600 + static_cast<std::uint64_t>(trial), 9, 2, -1000.0, 1000.0);
    const auto t = testutil::random_similarity(45 + static_cast<std::uint64_t>(trial), 2);
    const auto mapped = apply_similarity(ps, t);
    const std::vector<AngleSpec> specs{AngleSpec::from_radians(0.8),
                                       AngleSpec::from_radians(2.0)};
    CHECK(count_chains_bruteforce(ps, chains(specs, Distinctness::full, Method::brute)).count ==
          count_chains_bruteforce(mapped, chains(specs, Distinctness::full, Method::brute)).count);
  }
}

TEST_CASE("planar single-angle counts stay under the n^2 log n ceiling") {
  const auto check_ceiling = [](const PointSet& ps, const AngleSpec& spec) {
    const auto n = static_cast<double>(ps.size());
    const double ceiling = 20.0 * n * n * std::log2(std::max(4.0, n));
    const auto count = count_triples_planar_fast(ps, spec).count;
    CHECK(static_cast<double>(count) <= ceiling);
  };
  check_ceiling(testutil::unit_square(), AngleSpec::right_angle());
  check_ceiling(testutil::random_pointset(1, 60, 2), AngleSpec::from_radians(1.0));
  check_ceiling(gen_railroad(48, {AngleSpec::from_radians(kPi / 3)}).points,
                AngleSpec::from_radians(kPi / 3));
  check_ceiling(gen_pinned_st(64, AngleSpec::right_angle()).points, AngleSpec::right_angle());
}

TEST_CASE("duplicate points are rejected unless permitted") {
  Mat m(2, 4);
  m << 0, 1, 0, 2,
       0, 0, 0, 1;
  const auto ps = PointSet::from_columns(m);
  const std::vector<AngleSpec> specs{AngleSpec::right_angle()};
  ChainQuery q = chains(specs, Distinctness::full, Method::brute);
  CHECK_THROWS_AS(count_chains_bruteforce(ps, q), DuplicatePointsError);
  q.allow_duplicates = true;
  CHECK_NOTHROW(count_chains_bruteforce(ps, q));
  // Degenerate triples are skipped, so the count with duplicates is at least
  // the clean set's count.
  Mat clean(2, 3);
  clean << 0, 1, 2,
           0, 0, 1;
  const auto base = PointSet::from_columns(clean);
  const auto base_count =
      count_chains_bruteforce(base, chains(specs, Distinctness::full, Method::brute)).count;
  CHECK(count_chains_bruteforce(ps, q).count >= base_count);
}

TEST_CASE("query validation") {
  const auto square = testutil::unit_square();
  const std::vector<AngleSpec> one{AngleSpec::right_angle()};
  const std::vector<AngleSpec> two{AngleSpec::right_angle(), AngleSpec::right_angle()};

  ChainQuery q = chains(two, Distinctness::full, Method::brute);
  q.pin = PinSpec::middle(0);
  CHECK_THROWS_AS(count_chains(square, q), QueryInvalidError);

  q = chains(one, Distinctness::full, Method::brute);
  q.pin = PinSpec::first(99);
  CHECK_THROWS_AS(count_chains_bruteforce(square, q), QueryInvalidError);

  CHECK_THROWS_AS(count_chains_dp(square, chains(two, Distinctness::full, Method::dp)),
                  UnsupportedSemanticsError);

  Mat m3(3, 4);
  m3.setRandom();
  CHECK_THROWS_AS(count_triples_planar_fast(PointSet::from_columns(m3), one[0]),
                  DimensionMismatchError);

  q = chains(one, Distinctness::local, Method::dp);
  q.witness_cap = 5;
  CHECK_THROWS_AS(count_chains_dp(square, q), QueryInvalidError);

  ChainQuery empty;
  CHECK_THROWS_AS(count_chains(square, empty), QueryInvalidError);
}

TEST_CASE("witnesses satisfy the query they came from") {
  const auto out = gen_right_triples_r4(9);
  ChainQuery q = chains({AngleSpec::right_angle()}, Distinctness::full, Method::brute);
  q.witness_cap = 10;
  const auto report = count_chains_bruteforce(out.points, q);
  REQUIRE(report.witnesses.size() == 10);
  for (const auto& w : report.witnesses) {
    REQUIRE(w.size() == 3);
    CHECK(w[0] != w[1]);
    CHECK(w[1] != w[2]);
    CHECK(w[0] != w[2]);
    CHECK(matches_angle(out.points, w[0], w[1], w[2], q.angles[0]));
  }
}

TEST_CASE("index predicate agrees with the expression template") {
  const auto ps = testutil::random_pointset(777, 12, 3, -10.0, 10.0);
  for (Index a = 0; a < 4; ++a)
    for (Index b = 4; b < 8; ++b)
      for (Index c = 8; c < 12; ++c) {
        double fast = 0.0;
        REQUIRE(try_angle_cosine(ps, a, b, c, fast));
        CHECK(fast == angle_cosine(ps.point(a), ps.point(b), ps.point(c)));
      }
}

TEST_SUITE_END();
