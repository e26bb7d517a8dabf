#include "anglechain/io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace anglechain {

namespace {

using Json = nlohmann::ordered_json;

struct ParsedCoord {
  double value = 0.0;
  Rational exact;
  bool is_exact = false;
};

ParsedCoord parse_rational_token(const std::string& tok, const std::string& where) {
  const auto slash = tok.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == tok.size())
    throw FormatError(where + ": malformed rational '" + tok + "'");
  try {
    const BigInt num(tok.substr(0, slash));
    const BigInt den(tok.substr(slash + 1));
    if (den == 0) throw FormatError(where + ": zero denominator in '" + tok + "'");
    ParsedCoord c;
    c.exact = Rational(num, den);
    c.value = static_cast<double>(c.exact);
    c.is_exact = true;
    return c;
  } catch (const std::runtime_error&) {
    throw FormatError(where + ": malformed rational '" + tok + "'");
  }
}

ParsedCoord parse_json_coord(const Json& v, const std::string& where) {
  ParsedCoord c;
  if (v.is_number_integer()) {
    c.exact = Rational(v.get<std::int64_t>());
    c.value = static_cast<double>(v.get<std::int64_t>());
    c.is_exact = true;
  } else if (v.is_number_unsigned()) {
    c.exact = Rational(v.get<std::uint64_t>());
    c.value = static_cast<double>(v.get<std::uint64_t>());
    c.is_exact = true;
  } else if (v.is_number_float()) {
    c.value = v.get<double>();
  } else if (v.is_string()) {
    return parse_rational_token(v.get<std::string>(), where);
  } else {
    throw FormatError(where + ": coordinate must be a number or a 'p/q' string");
  }
  if (!std::isfinite(c.value)) throw FormatError(where + ": non-finite coordinate");
  return c;
}

PointSet build(Index dim, const std::vector<std::vector<ParsedCoord>>& rows,
               std::optional<Index> pin, const std::string& source) {
  Mat coords(dim, static_cast<Index>(rows.size()));
  bool all_exact = !rows.empty();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (Index r = 0; r < dim; ++r) {
      coords(r, static_cast<Index>(i)) = rows[i][static_cast<std::size_t>(r)].value;
      all_exact = all_exact && rows[i][static_cast<std::size_t>(r)].is_exact;
    }
  }
  PointSet ps = PointSet::from_columns(std::move(coords));
  if (all_exact) {
    RationalMat ex(dim, static_cast<Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (Index r = 0; r < dim; ++r)
        ex(r, static_cast<Index>(i)) = rows[i][static_cast<std::size_t>(r)].exact;
    ps.attach_exact(std::move(ex));
  }
  if (pin) {
    if (*pin < 0 || *pin >= ps.size())
      throw FormatError(source + ": pin index " + std::to_string(*pin) + " out of range");
    ps.set_pin(*pin);
  }
  return ps;
}

}  // namespace

PointSet load_pointset_json(std::istream& in, const std::string& source_name) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(source_name + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("points"))
    throw FormatError(source_name + ": expected an object with 'dim' and 'points'");
  if (!doc["dim"].is_number_integer())
    throw FormatError(source_name + ": 'dim' must be an integer");
  const Index dim = doc["dim"].get<Index>();
  if (dim < 2) throw FormatError(source_name + ": 'dim' must be >= 2");
  if (!doc["points"].is_array())
    throw FormatError(source_name + ": 'points' must be an array");

  std::vector<std::vector<ParsedCoord>> rows;
  Index pt = 0;
  for (const auto& row : doc["points"]) {
    const std::string where = source_name + ": point " + std::to_string(pt);
    if (!row.is_array() || static_cast<Index>(row.size()) != dim)
      throw FormatError(where + " has " + std::to_string(row.size()) +
                        " coordinates, expected " + std::to_string(dim));
    std::vector<ParsedCoord> coords;
    for (const auto& v : row) coords.push_back(parse_json_coord(v, where));
    rows.push_back(std::move(coords));
    ++pt;
  }

  std::optional<Index> pin;
  if (doc.contains("pin") && !doc["pin"].is_null()) {
    if (!doc["pin"].is_number_integer())
      throw FormatError(source_name + ": 'pin' must be an integer index");
    pin = doc["pin"].get<Index>();
  }
  return build(dim, rows, pin, source_name);
}

PointSet load_pointset_csv(std::istream& in, Index dim, const std::string& source_name) {
  if (dim < 2) throw FormatError(source_name + ": csv loading needs dim >= 2");
  std::vector<std::vector<ParsedCoord>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string where = source_name + ": line " + std::to_string(lineno);
    std::vector<ParsedCoord> coords;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      // trim
      const auto b = cell.find_first_not_of(" \t\r");
      const auto e = cell.find_last_not_of(" \t\r");
      if (b == std::string::npos) throw FormatError(where + ": empty cell");
      cell = cell.substr(b, e - b + 1);
      if (cell.find('/') != std::string::npos) {
        coords.push_back(parse_rational_token(cell, where));
      } else {
        ParsedCoord c;
        std::size_t used = 0;
        try {
          c.value = std::stod(cell, &used);
        } catch (const std::exception&) {
          throw FormatError(where + ": cannot parse '" + cell + "'");
        }
        if (used != cell.size()) throw FormatError(where + ": trailing junk in '" + cell + "'");
        if (!std::isfinite(c.value)) throw FormatError(where + ": non-finite coordinate");
        // Integers stay exact so lattice CSVs support the exact right angle.
        if (cell.find_first_of(".eE") == std::string::npos) {
          c.exact = Rational(BigInt(cell));
          c.is_exact = true;
        }
        coords.push_back(c);
      }
    }
    if (static_cast<Index>(coords.size()) != dim)
      throw FormatError(where + ": expected " + std::to_string(dim) + " values, got " +
                        std::to_string(coords.size()));
    rows.push_back(std::move(coords));
  }
  return build(dim, rows, std::nullopt, source_name);
}

PointSet load_pointset(const std::string& path, std::optional<Index> csv_dim) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  const bool looks_csv = path.size() > 4 && path.substr(path.size() - 4) == ".csv";
  if (looks_csv || csv_dim) {
    if (!csv_dim) throw FormatError(path + ": csv input needs an explicit --dim");
    return load_pointset_csv(in, *csv_dim, path);
  }
  return load_pointset_json(in, path);
}

std::string pointset_to_json(const PointSet& ps) {
  Json doc;
  doc["dim"] = ps.dim();
  if (ps.pin()) doc["pin"] = *ps.pin();
  Json points = Json::array();
  for (Index i = 0; i < ps.size(); ++i) {
    Json row = Json::array();
    for (Index r = 0; r < ps.dim(); ++r) {
      if (ps.has_exact()) {
        const Rational& q = ps.exact()(r, i);
        const BigInt num = boost::multiprecision::numerator(q);
        const BigInt den = boost::multiprecision::denominator(q);
        constexpr std::int64_t lo = std::numeric_limits<std::int64_t>::min();
        constexpr std::int64_t hi = std::numeric_limits<std::int64_t>::max();
        if (den == 1 && num >= lo && num <= hi) {
          row.push_back(num.convert_to<std::int64_t>());
        } else {
          row.push_back(num.str() + "/" + den.str());
        }
      } else {
        row.push_back(ps.coords()(r, i));
      }
    }
    points.push_back(std::move(row));
  }
  doc["points"] = std::move(points);
  return doc.dump();
}

void save_pointset(const PointSet& ps, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  out << pointset_to_json(ps) << "\n";
}

}  // namespace anglechain
