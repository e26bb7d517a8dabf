#include "anglechain/angle.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

namespace anglechain {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

bool parse_double(std::string_view s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

bool parse_positive_int(std::string_view s, long& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && out > 0;
}

}  // namespace

AngleSpec AngleSpec::from_radians(double radians, double tol) {
  if (!std::isfinite(radians) || !(radians > 0.0) || !(radians < kPi))
    throw OutOfRangeError("angle must lie strictly inside (0, pi), got " +
                          std::to_string(radians));
  if (!(tol >= 0.0)) throw InvalidParamsError("cosine tolerance must be nonnegative");
  AngleSpec spec;
  spec.radians = radians;
  spec.tol = tol;
  spec.exact_right = (radians == kHalfPi);
  // cos(pi/2) in doubles is ~6e-17, not 0; the right angle means exactly 0.
  spec.cosine = spec.exact_right ? 0.0 : std::cos(radians);
  return spec;
}

AngleSpec AngleSpec::right_angle(double tol) { return from_radians(kHalfPi, tol); }

AngleSpec parse_angle(std::string_view text, double tol) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty angle");

  const auto fail = [&] {
    throw ParseError("cannot parse angle '" + std::string(text) +
                     "' (expected pi/<q>, <p>pi/<q>, <x>rad or <x>deg)");
  };

  double radians = 0.0;
  if (auto pos = s.find("pi"); pos != std::string_view::npos) {
    long p = 1, q = 1;
    const std::string_view before = s.substr(0, pos);
    std::string_view after = s.substr(pos + 2);
    if (!before.empty() && !parse_positive_int(before, p)) fail();
    if (!after.empty()) {
      if (after.front() != '/') fail();
      after.remove_prefix(1);
      if (!parse_positive_int(after, q)) fail();
    }
    // Exact pi/2 (and equivalents like 2pi/4) routes through kHalfPi so the
    // parsed value is bit-equal to the right-angle constant.
    if (p * 2 == q)
      radians = kHalfPi;
    else
      radians = static_cast<double>(p) * kPi / static_cast<double>(q);
  } else if (s.size() > 3 && s.substr(s.size() - 3) == "rad") {
    double v = 0.0;
    if (!parse_double(s.substr(0, s.size() - 3), v)) fail();
    radians = v;
  } else if (s.size() > 3 && s.substr(s.size() - 3) == "deg") {
    double v = 0.0;
    if (!parse_double(s.substr(0, s.size() - 3), v)) fail();
    radians = (v == 90.0) ? kHalfPi : v * kPi / 180.0;
  } else {
    fail();
  }

  return AngleSpec::from_radians(radians, tol);
}

bool try_angle_cosine(const PointSet& ps, Index a, Index b, Index c, double& out) noexcept {
  const auto& m = ps.coords();
  double dot = 0.0, sq_a = 0.0, sq_c = 0.0;
  for (Index r = 0; r < m.rows(); ++r) {
    const double ta = m(r, a) - m(r, b);
    const double tc = m(r, c) - m(r, b);
    dot += ta * tc;
    sq_a += ta * ta;
    sq_c += tc * tc;
  }
  if (sq_a == 0.0 || sq_c == 0.0) return false;
  out = std::clamp(dot / (std::sqrt(sq_a) * std::sqrt(sq_c)), -1.0, 1.0);
  return true;
}

double angle_cosine(const PointSet& ps, Index a, Index b, Index c) {
  double cosv = 0.0;
  if (!try_angle_cosine(ps, a, b, c, cosv))
    throw DegenerateAngleError("angle at a repeated vertex point is undefined");
  return cosv;
}

bool matches_angle(const PointSet& ps, Index a, Index b, Index c, const AngleSpec& spec) {
  if (spec.exact_right && ps.has_exact()) {
    const auto& ex = ps.exact();
    if (ex.col(a) == ex.col(b) || ex.col(c) == ex.col(b))
      throw DegenerateAngleError("angle at a repeated vertex point is undefined");
    return perpendicular_exact(ex.col(a), ex.col(b), ex.col(c));
  }
  return std::abs(angle_cosine(ps, a, b, c) - spec.cosine) <= spec.tol;
}

}  // namespace anglechain
