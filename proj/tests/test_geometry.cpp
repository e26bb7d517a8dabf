#include <doctest.h>

#include <cmath>
#include <numbers>

#include "anglechain/angle.hpp"
#include "anglechain/core.hpp"
#include "test_util.hpp"

using namespace anglechain;

namespace {
constexpr double kPi = std::numbers::pi;

Vec vec2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}
}  // namespace

TEST_SUITE_BEGIN("geometry");

TEST_CASE("angle cosine on axis triples") {
  CHECK(angle_cosine(vec2(1, 0), vec2(0, 0), vec2(0, 1)) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(angle_cosine(vec2(1, 0), vec2(0, 0), vec2(1, 1)) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(angle_cosine(vec2(2, 0), vec2(1, 0), vec2(0, 0)) == doctest::Approx(-1.0));
}

TEST_CASE("degenerate and mismatched triples raise") {
  CHECK_THROWS_AS(angle_cosine(vec2(0, 0), vec2(0, 0), vec2(0, 1)), DegenerateAngleError);
  CHECK_THROWS_AS(angle_cosine(vec2(1, 0), vec2(0, 0), vec2(0, 0)), DegenerateAngleError);
  Vec v3(3);
  v3 << 1, 0, 0;
  CHECK_THROWS_AS(angle_cosine(v3, vec2(0, 0), vec2(0, 1)), DimensionMismatchError);
}

TEST_CASE("r4 cross-family triple is perpendicular") {
  Vec x1(4), x2(4), x3(4);
  x1 << -1, 0, 1, 0;
  x2 << std::cos(1.0), std::sin(1.0), 0, 0;
  x3 << 1, 0, 0, 1;
  CHECK(matches_angle(x1, x2, x3, AngleSpec::right_angle()));
  CHECK(std::abs(angle_cosine(x1, x2, x3)) <= 1e-12);
}

TEST_CASE("matches_angle on square corners") {
  const AngleSpec right = AngleSpec::right_angle();
  CHECK(matches_angle(vec2(1, 0), vec2(0, 0), vec2(0, 1), right));
  CHECK_FALSE(matches_angle(vec2(1, 0), vec2(0, 0), vec2(1, 1), right));
}

TEST_CASE("matches_angle is symmetric in outer points") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    Vec a(3), b(3), c(3);
    for (int r = 0; r < 3; ++r) {
      a(r) = coord(rng);
      b(r) = coord(rng);
      c(r) = coord(rng);
    }
    const double lhs = angle_cosine(a, b, c);
    const double rhs = angle_cosine(c, b, a);
    CHECK(std::abs(lhs - rhs) <= 1e-15);
  }
}

TEST_CASE("similarity transforms preserve cosines") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coord(-1000.0, 1000.0);
  for (int trial = 0; trial < 50; ++trial) {
    Mat pts(3, 3);
    for (Index c = 0; c < 3; ++c)
      for (Index r = 0; r < 3; ++r) pts(r, c) = coord(rng);
    auto ps = PointSet::from_columns(pts);
    const auto t = testutil::random_similarity(1000 + static_cast<std::uint64_t>(trial), 3);
    const auto mapped = apply_similarity(ps, t);
    double before = 0.0, after = 0.0;
    if (!try_angle_cosine(ps, 0, 1, 2, before)) continue;
    REQUIRE(try_angle_cosine(mapped, 0, 1, 2, after));
    CHECK(std::abs(before - after) <= 1e-9);
  }
}

TEST_CASE("apply_similarity examples") {
  auto square = testutil::unit_square();
  SUBCASE("identity is coordinate-exact") {
    const auto out = apply_similarity(square, SimilarityTransform::identity(2));
    CHECK(out.coords() == square.coords());
  }
  SUBCASE("quarter turn maps (1,0) to (0,1)") {
    const auto t = SimilarityTransform::plane_rotation(2, kPi / 2);
    const auto out = apply_similarity(square, t);
    CHECK(out.point(1)(0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(out.point(1)(1) == doctest::Approx(1.0));
  }
  SUBCASE("scaling by 2 leaves cosines unchanged") {
    SimilarityTransform t = SimilarityTransform::identity(2);
    t.scale = 2.0;
    const auto out = apply_similarity(square, t);
    for (Index b = 0; b < 4; ++b)
      for (Index a = 0; a < 4; ++a)
        for (Index c = 0; c < 4; ++c) {
          if (a == b || c == b) continue;
          CHECK(std::abs(angle_cosine(out, a, b, c) - angle_cosine(square, a, b, c)) <= 1e-12);
        }
  }
  SUBCASE("pin survives the map") {
    square.set_pin(2);
    const auto out = apply_similarity(square, SimilarityTransform::identity(2));
    REQUIRE(out.pin().has_value());
    CHECK(*out.pin() == 2);
  }
  SUBCASE("dimension mismatch raises") {
    CHECK_THROWS_AS(apply_similarity(square, SimilarityTransform::identity(3)),
                    DimensionMismatchError);
  }
}

TEST_CASE("collinear triples have cosine +-1") {
  // b strictly between a and c: opposite rays, cosine -1; same side: +1.
  CHECK(angle_cosine(vec2(0, 0), vec2(1, 0), vec2(3, 0)) == doctest::Approx(-1.0));
  CHECK(angle_cosine(vec2(3, 0), vec2(1, 0), vec2(2, 0)) == doctest::Approx(1.0));
  // Hence no interior angle with a tolerance below 1-|cos| matches them.
  const AngleSpec third = AngleSpec::from_radians(kPi / 3);
  CHECK_FALSE(matches_angle(vec2(0, 0), vec2(1, 0), vec2(3, 0), third));
  CHECK_FALSE(matches_angle(vec2(3, 0), vec2(1, 0), vec2(2, 0), third));
}

TEST_CASE("parse_angle grammar") {
  const AngleSpec right = parse_angle("pi/2");
  CHECK(right.radians == doctest::Approx(kPi / 2));
  CHECK(right.cosine == 0.0);
  CHECK(right.exact_right);

  CHECK(parse_angle("60deg").cosine == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(parse_angle("2pi/3").radians == doctest::Approx(2 * kPi / 3));
  CHECK(parse_angle("0.5rad").radians == doctest::Approx(0.5));
  CHECK(parse_angle("90deg").exact_right);
  CHECK_FALSE(parse_angle("pi/3").exact_right);

  CHECK_THROWS_AS(parse_angle("0rad"), OutOfRangeError);
  CHECK_THROWS_AS(parse_angle("pi"), OutOfRangeError);
  CHECK_THROWS_AS(parse_angle("4rad"), OutOfRangeError);
  CHECK_THROWS_AS(parse_angle("180deg"), OutOfRangeError);
  CHECK_THROWS_AS(parse_angle("banana"), ParseError);
  CHECK_THROWS_AS(parse_angle("pi/0"), ParseError);
  CHECK_THROWS_AS(parse_angle(""), ParseError);
}

TEST_CASE("angle spec invariants") {
  CHECK_THROWS_AS(AngleSpec::from_radians(0.0), OutOfRangeError);
  CHECK_THROWS_AS(AngleSpec::from_radians(kPi), OutOfRangeError);
  CHECK_THROWS_AS(AngleSpec::from_radians(kPi / 2, -1.0), InvalidParamsError);
  const auto spec = AngleSpec::from_radians(kPi / 3);
  CHECK(spec.cosine == doctest::Approx(0.5));
  CHECK(spec.tol == kDefaultCosineTol);
}

TEST_CASE("exact right-angle mode uses rational dot products") {
  Mat m(2, 3);
  m << 1, 0, 0,
       0, 0, 1;
  auto ps = PointSet::from_columns(m);
  RationalMat ex(2, 3);
  ex << Rational(1), Rational(0), Rational(0),
        Rational(0), Rational(0), Rational(1);
  ps.attach_exact(ex);

  const AngleSpec right = AngleSpec::right_angle();
  CHECK(matches_angle(ps, 0, 1, 2, right));

  // A near-miss that the tolerance accepts but the exact test rejects.
  Mat m2(2, 3);
  m2 << 1, 0, 1e-12,
        0, 0, 1;
  auto near_miss = PointSet::from_columns(m2);
  RationalMat ex2(2, 3);
  ex2 << Rational(1), Rational(0), Rational(1, 1000000000000LL),
         Rational(0), Rational(0), Rational(1);
  near_miss.attach_exact(ex2);
  CHECK_FALSE(matches_angle(near_miss, 0, 1, 2, right));  // exact: dot != 0
  CHECK(matches_angle(near_miss.point(0), near_miss.point(1), near_miss.point(2), right));
}

TEST_CASE("validation flags duplicates and bad pins") {
  Mat m(2, 3);
  m << 0, 1, 0,
       0, 0, 0;
  auto ps = PointSet::from_columns(m);
  const auto issues = validate_pointset(ps);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].find("duplicate") != std::string::npos);
  CHECK_THROWS_AS(require_countable(ps, false), DuplicatePointsError);
  CHECK_NOTHROW(require_countable(ps, true));

  Mat ok(2, 2);
  ok << 0, 1,
        0, 0;
  auto good = PointSet::from_columns(ok);
  CHECK(validate_pointset(good).empty());
}

TEST_SUITE_END();
