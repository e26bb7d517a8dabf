#include "anglechain/core.hpp"

#include <algorithm>
#include <cmath>

namespace anglechain {

namespace {

// Exact coordinate equality; duplicates in this sense make angles undefined.
bool same_point(const PointSet& ps, Index i, Index j) {
  return ps.point(i) == ps.point(j);
}

}  // namespace

std::vector<std::string> validate_pointset(const PointSet& ps) {
  std::vector<std::string> issues;
  if (ps.dim() < 2) issues.push_back("dimension must be >= 2");
  for (Index i = 0; i < ps.size(); ++i) {
    if (!ps.point(i).allFinite()) {
      issues.push_back("point " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
  if (ps.pin() && (*ps.pin() < 0 || *ps.pin() >= ps.size()))
    issues.push_back("pin index " + std::to_string(*ps.pin()) + " out of range");

  // Duplicate detection via lexicographic sort of the columns.
  std::vector<Index> order(static_cast<std::size_t>(ps.size()));
  for (Index i = 0; i < ps.size(); ++i) order[static_cast<std::size_t>(i)] = i;
  const auto less = [&](Index a, Index b) {
    for (Index r = 0; r < ps.dim(); ++r) {
      if (ps.coords()(r, a) != ps.coords()(r, b)) return ps.coords()(r, a) < ps.coords()(r, b);
    }
    return false;
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t t = 1; t < order.size(); ++t) {
    if (same_point(ps, order[t - 1], order[t])) {
      issues.push_back("duplicate points at indices " + std::to_string(order[t - 1]) + " and " +
                       std::to_string(order[t]));
    }
  }
  return issues;
}

void require_countable(const PointSet& ps, bool allow_duplicates) {
  for (const auto& issue : validate_pointset(ps)) {
    const bool is_duplicate = issue.rfind("duplicate", 0) == 0;
    if (is_duplicate) {
      if (!allow_duplicates)
        throw DuplicatePointsError(issue + " (pass allow_duplicates to skip degenerate triples)");
      continue;
    }
    throw InvalidParamsError(issue);
  }
}

}  // namespace anglechain
