#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kgsolve/hulthen.hpp"

namespace kgsolve::refdata {

enum class TableId { I, II };
enum class Source { ours, ref32, ref33_34 };

std::string_view to_string(TableId id);
std::string_view to_string(Source source);
TableId parse_table_id(std::string_view text);
Source parse_source(std::string_view text);

/// A tabulated number together with the digits it was printed with.
struct PrintedValue {
  double value;
  int decimals;

  std::string text() const;
  static PrintedValue parse(std::string_view text);
};

struct ConfigKey {
  double m0, m1, V0, S0;
  int n, l;

  bool operator==(const ConfigKey&) const = default;
  hulthen::ModelParams params() const;
  hulthen::QuantumNumbers qn() const { return {n, l}; }
};

enum class Column { e_a, e_p };

struct ReferenceRow {
  TableId table;
  ConfigKey key;
  std::optional<PrintedValue> e_a;  ///< absent encodes a "—" entry
  std::optional<PrintedValue> e_p;
  Source source = Source::ours;
  std::string note;

  /// Column named by a "suspected-typo:<column>" note, if any.
  std::optional<Column> suspected_typo() const;
};

/// The embedded transcription of a table (all sources, in file order).
std::vector<ReferenceRow> load_table(TableId id);

/// Rows of one source column.
std::vector<ReferenceRow> load_table(TableId id, Source source);

/// CSV with header m0,m1,V0,S0,n,l,e_a,e_p,source,note; empty cells for "—".
std::vector<ReferenceRow> parse_table_csv(std::string_view csv, TableId id);
std::string serialize_table_csv(const std::vector<ReferenceRow>& rows);

struct ComparisonRecord {
  ReferenceRow row;
  std::optional<hulthen::EnergyPair> computed;
  std::optional<double> diff_a;  ///< |computed - printed| where both exist
  std::optional<double> diff_p;
  bool absence_agree = true;
  bool pass_a = true;
  bool pass_p = true;
  bool pass = true;
  std::optional<Column> suspected_typo;
  std::optional<double> symmetric;  ///< charge-conjugate value for the flagged column
  std::string annotation;
};

/// Value of `column` predicted from the configuration with V0 negated.
std::optional<double> symmetric_prediction(const ConfigKey& key, Column column);

/// Compares a computed level pair against a reference row at absolute
/// tolerance `tol`. Under Source::ours a "—" must coincide with a missing
/// pair; under the other sources a "—" means "not reported" and is skipped.
/// Throws ConfigMismatch if `computed_key` differs from the row's key.
ComparisonRecord compare(const ConfigKey& computed_key,
                         const std::optional<hulthen::EnergyPair>& computed,
                         const ReferenceRow& row, double tol);

}  // namespace kgsolve::refdata
