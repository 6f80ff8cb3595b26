#include "render.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace kgsolve::cli {

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format " + name);
}

std::string fixed7(double value) {
  if (value == 0.0) value = 0.0;
  return fmt::format("{:#.7g}", value);
}

namespace {

std::string cell_text(const nlohmann::ordered_json& v, bool text_mode) {
  if (v.is_null()) return text_mode ? "—" : "null";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  if (v.is_number_float()) return fixed7(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Display width for alignment; counts UTF-8 code points.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

}  // namespace

void render(const RowTable& table, Format format, std::ostream& out) {
  if (format == Format::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) arr.push_back(row);
    out << arr.dump(2) << '\n';
    return;
  }
  for (const auto& c : table.comments) out << "# " << c << '\n';
  const bool text = format == Format::text;
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : table.rows) {
    std::vector<std::string> line;
    for (const auto& col : table.columns) {
      line.push_back(row.contains(col) ? cell_text(row.at(col), text) : (text ? "" : ""));
    }
    cells.push_back(std::move(line));
  }
  if (!text) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "," : "") << csv_escape(line[i]);
      out << '\n';
    }
    return;
  }
  std::vector<std::size_t> width(table.columns.size());
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    width[i] = display_width(table.columns[i]);
    for (const auto& line : cells) width[i] = std::max(width[i], display_width(line[i]));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string s;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) s += "  ";
      s += line[i];
      if (i + 1 < line.size()) s.append(width[i] - display_width(line[i]), ' ');
    }
    out << s << '\n';
  };
  emit(table.columns);
  for (const auto& line : cells) emit(line);
}

}  // namespace kgsolve::cli
