#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace kgsolve::cli {

enum class Format { text, csv, json };

Format parse_format(const std::string& name);

/// Seven significant digits with trailing zeros kept, e.g. -0.6000000.
std::string fixed7(double value);

/// Rows of named cells rendered as an aligned text table ("—" for null),
/// CSV (explicit `null`) or a JSON array of objects (shortest round-trip
/// numbers). Comment lines precede text and CSV output as "# ..." lines.
struct RowTable {
  std::vector<std::string> columns;
  std::vector<nlohmann::ordered_json> rows;
  std::vector<std::string> comments;
};

void render(const RowTable& table, Format format, std::ostream& out);

}  // namespace kgsolve::cli
