#include "kgsolve/refdata.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "kgsolve/error.hpp"

namespace kgsolve::refdata {

namespace detail {
extern const std::string_view kTableICsv;
extern const std::string_view kTableIICsv;
}  // namespace detail

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_double(std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::ParseError, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

int parse_int(std::string_view text) {
  text = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::string format_plain(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Splits on commas; only the last field (note) may itself contain commas.
std::vector<std::string_view> split_fields(std::string_view line, std::size_t expected) {
  std::vector<std::string_view> fields;
  while (fields.size() + 1 < expected) {
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) break;
    fields.push_back(line.substr(0, comma));
    line.remove_prefix(comma + 1);
  }
  fields.push_back(line);
  return fields;
}

constexpr std::string_view kHeader = "m0,m1,V0,S0,n,l,e_a,e_p,source,note";

}  // namespace

std::string_view to_string(TableId id) { return id == TableId::I ? "I" : "II"; }

std::string_view to_string(Source source) {
  switch (source) {
    case Source::ours: return "ours";
    case Source::ref32: return "ref32";
    case Source::ref33_34: return "ref33_34";
  }
  return "ours";
}

TableId parse_table_id(std::string_view text) {
  if (text == "I" || text == "1") return TableId::I;
  if (text == "II" || text == "2") return TableId::II;
  throw Error(ErrorKind::ParseError, "unknown table id '" + std::string(text) + "'");
}

Source parse_source(std::string_view text) {
  if (text == "ours") return Source::ours;
  if (text == "ref32") return Source::ref32;
  if (text == "ref33_34" || text == "ref33") return Source::ref33_34;
  throw Error(ErrorKind::ParseError, "unknown source '" + std::string(text) + "'");
}

std::string PrintedValue::text() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

PrintedValue PrintedValue::parse(std::string_view text) {
  text = trim(text);
  const auto dot = text.find('.');
  const int decimals = dot == std::string_view::npos ? 0 : static_cast<int>(text.size() - dot - 1);
  return {parse_double(text), decimals};
}

hulthen::ModelParams ConfigKey::params() const {
  hulthen::ModelParams p;
  p.m0 = m0;
  p.m1 = m1;
  p.V0 = V0;
  p.S0 = S0;
  p.r0 = 1.0;
  return p;
}

std::optional<Column> ReferenceRow::suspected_typo() const {
  constexpr std::string_view tag = "suspected-typo:";
  if (note.rfind(tag, 0) != 0) return std::nullopt;
  const std::string_view rest = std::string_view(note).substr(tag.size());
  if (rest.rfind("e_a", 0) == 0) return Column::e_a;
  if (rest.rfind("e_p", 0) == 0) return Column::e_p;
  return std::nullopt;
}

std::vector<ReferenceRow> parse_table_csv(std::string_view csv, TableId id) {
  std::vector<ReferenceRow> rows;
  bool header_seen = false;
  int line_no = 0;
  while (!csv.empty()) {
    const auto nl = csv.find('\n');
    std::string_view line = csv.substr(0, nl);
    csv.remove_prefix(nl == std::string_view::npos ? csv.size() : nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kHeader) throw Error(ErrorKind::ParseError, "unexpected CSV header");
      header_seen = true;
      continue;
    }
    const auto f = split_fields(line, 10);
    if (f.size() != 10) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected 10 fields");
    }
    ReferenceRow row;
    row.table = id;
    row.key = {parse_double(f[0]), parse_double(f[1]), parse_double(f[2]),
               parse_double(f[3]), parse_int(f[4]),    parse_int(f[5])};
    if (!trim(f[6]).empty()) row.e_a = PrintedValue::parse(f[6]);
    if (!trim(f[7]).empty()) row.e_p = PrintedValue::parse(f[7]);
    row.source = parse_source(trim(f[8]));
    row.note = std::string(trim(f[9]));
    rows.push_back(std::move(row));
  }
  if (!header_seen) throw Error(ErrorKind::ParseError, "empty table CSV");
  return rows;
}

std::string serialize_table_csv(const std::vector<ReferenceRow>& rows) {
  std::ostringstream os;
  os << kHeader << '\n';
  for (const auto& r : rows) {
    os << format_plain(r.key.m0) << ',' << format_plain(r.key.m1) << ','
       << format_plain(r.key.V0) << ',' << format_plain(r.key.S0) << ',' << r.key.n << ','
       << r.key.l << ',' << (r.e_a ? r.e_a->text() : "") << ','
       << (r.e_p ? r.e_p->text() : "") << ',' << to_string(r.source) << ',' << r.note << '\n';
  }
  return os.str();
}

std::vector<ReferenceRow> load_table(TableId id) {
  return parse_table_csv(id == TableId::I ? detail::kTableICsv : detail::kTableIICsv, id);
}

std::vector<ReferenceRow> load_table(TableId id, Source source) {
  std::vector<ReferenceRow> out;
  for (auto& row : load_table(id)) {
    if (row.source == source) out.push_back(std::move(row));
  }
  return out;
}

std::optional<double> symmetric_prediction(const ConfigKey& key, Column column) {
  hulthen::ModelParams mirror = key.params();
  mirror.V0 = -mirror.V0;
  const auto pair = hulthen::energy_levels(mirror, key.qn());
  if (!pair) return std::nullopt;
  // (E, V0) -> (-E, -V0) maps the ordered pair (a, p) onto (-p, -a).
  return column == Column::e_a ? -pair->e_p : -pair->e_a;
}

namespace {

std::string fmt_prediction(Column column, double value, int decimals) {
  std::ostringstream out;
  out << "suspected typo in " << (column == Column::e_a ? "e_a" : "e_p")
      << "; charge-conjugate recomputation gives " << std::fixed << std::setprecision(decimals)
      << value;
  return out.str();
}

}  // namespace

ComparisonRecord compare(const ConfigKey& computed_key,
                         const std::optional<hulthen::EnergyPair>& computed,
                         const ReferenceRow& row, double tol) {
  if (!(computed_key == row.key)) {
    throw Error(ErrorKind::ConfigMismatch, "computed configuration does not match the row");
  }
  ComparisonRecord rec;
  rec.row = row;
  rec.computed = computed;
  rec.suspected_typo = row.suspected_typo();
  rec.annotation = row.note;

  const bool strict_absence = row.source == Source::ours;
  auto check = [&](const std::optional<PrintedValue>& printed, std::optional<double> value,
                   std::optional<double>& diff, bool& pass) {
    if (!printed) {
      if (strict_absence && value) {
        rec.absence_agree = false;
        pass = false;
      }
      return;
    }
    if (!value) {
      rec.absence_agree = false;
      pass = false;
      return;
    }
    diff = std::abs(*value - printed->value);
    pass = *diff <= tol;
  };
  std::optional<double> a;
  std::optional<double> p;
  if (computed) {
    a = computed->e_a;
    p = computed->e_p;
  }
  check(row.e_a, a, rec.diff_a, rec.pass_a);
  check(row.e_p, p, rec.diff_p, rec.pass_p);
  rec.pass = rec.pass_a && rec.pass_p && rec.absence_agree;
  if (rec.suspected_typo) {
    const Column col = *rec.suspected_typo;
    if (const auto predicted = symmetric_prediction(row.key, col)) {
      const auto& printed = col == Column::e_a ? row.e_a : row.e_p;
      rec.symmetric = predicted;
      rec.annotation = fmt_prediction(col, *predicted, printed ? printed->decimals : 7);
    }
  }
  return rec;
}

}  // namespace kgsolve::refdata
