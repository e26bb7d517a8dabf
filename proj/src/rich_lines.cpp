#include <algorithm>
#include <cmath>

#include "anglechain/counting.hpp"

namespace anglechain {

namespace {

constexpr double kCollinearTol = 1e-9;

// Distance from point x to the line through p with unit direction dir.
double line_distance(const Vec& x, const Vec& p, const Vec& dir) {
  const Vec v = x - p;
  return (v - v.dot(dir) * dir).norm();
}

double snap(double v) {
  const double s = std::round(v * 1e9) / 1e9;
  return s == 0.0 ? 0.0 : s;  // normalize -0
}

Vec snap_grid(Vec v) {
  for (Index r = 0; r < v.size(); ++r) v(r) = snap(v(r));
  return v;
}

// Unit direction with the first nonzero component positive.
Vec canonical_direction(Vec dir) {
  for (Index r = 0; r < dir.size(); ++r) {
    if (dir(r) != 0.0) {
      if (dir(r) < 0.0) dir = -dir;
      break;
    }
  }
  return dir;
}

}  // namespace

RichLineReport count_rich_lines(const PointSet& ps, int r, bool collect_lines) {
  if (r < 2) throw InvalidParamsError("rich lines need r >= 2");
  const Index n = ps.size();
  RichLineReport report;
  report.r = r;
  if (n < 2) return report;

  // pair_done[i*n + j]: the line through points i and j has been gathered.
  std::vector<char> pair_done(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  std::vector<Index> members;

  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (pair_done[static_cast<std::size_t>(i * n + j)]) continue;
      if (ps.point(i) == ps.point(j)) continue;  // duplicates define no line
      const Vec anchor_pt = ps.point(i);
      const Vec dir = (ps.point(j) - ps.point(i)).normalized();

      members.clear();
      for (Index t = 0; t < n; ++t) {
        if (line_distance(ps.point(t), anchor_pt, dir) <= kCollinearTol) members.push_back(t);
      }
      for (std::size_t u = 0; u < members.size(); ++u) {
        for (std::size_t v = u + 1; v < members.size(); ++v) {
          pair_done[static_cast<std::size_t>(members[u] * n + members[v])] = 1;
        }
      }

      // Distinct points on the line (duplicate coordinates collapse).
      Index distinct = 0;
      for (std::size_t u = 0; u < members.size(); ++u) {
        bool repeat = false;
        for (std::size_t v = 0; v < u && !repeat; ++v)
          repeat = (ps.point(members[u]) == ps.point(members[v]));
        if (!repeat) ++distinct;
      }
      if (distinct < r) continue;

      ++report.line_count;
      if (collect_lines) {
        RichLine line;
        line.direction = snap_grid(canonical_direction(dir));
        line.anchor = snap_grid(anchor_pt - anchor_pt.dot(dir) * dir);
        line.members = members;
        report.lines.push_back(std::move(line));
      }
    }
  }
  return report;
}

}  // namespace anglechain
