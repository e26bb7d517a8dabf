#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "anglechain/core.hpp"

namespace anglechain {

/// Reads a point set from a JSON file {"dim": d, "pin": i?, "points": [...]}
/// or a headerless CSV (one point per row; csv_dim required). Coordinates may
/// be decimal numbers or exact rationals "p/q"; when every coordinate of the
/// file is an integer or a rational, an exact rational view is attached.
PointSet load_pointset(const std::string& path, std::optional<Index> csv_dim = std::nullopt);

PointSet load_pointset_json(std::istream& in, const std::string& source_name);
PointSet load_pointset_csv(std::istream& in, Index dim, const std::string& source_name);

/// Canonical JSON serialization: integers as JSON integers, non-integer
/// rationals as "p/q" strings, doubles with shortest round-trip decimals.
/// save(load(f)) is byte-identical when f is already canonical.
std::string pointset_to_json(const PointSet& ps);
void save_pointset(const PointSet& ps, const std::string& path);

}  // namespace anglechain
