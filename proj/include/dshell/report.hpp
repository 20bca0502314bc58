#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "dshell/cross_sections.hpp"
#include "dshell/observables.hpp"
#include "dshell/spectra.hpp"

namespace dshell {

/// Artifact version written into JSON metadata.
inline constexpr const char* kVersion = "1.0.0";

/// Locale-independent, 9 significant digits, lowercase exponent. -0 prints as 0.
std::string format_number(double x);

/// Round x to what format_number prints.
double round_to_printed(double x);

/// One table cell: empty, integer, real, or text.
using Cell = std::variant<std::monostate, long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Run metadata for JSON output.
struct ReportMeta {
  std::string command;
  PotentialSpec spec;
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
};

enum class OutputFormat { csv, json };

/// Header line plus one line per row; empty cells print as nothing.
void write_csv(std::ostream& out, const Table& table);

/// {"meta": {...}, "rows": [{column: value}, ...]}, or with `as_curve` a
/// "curve" object holding one array per column.
void write_json(std::ostream& out, const ReportMeta& meta, const Table& table, bool as_curve);

void write_table(std::ostream& out, OutputFormat format, const ReportMeta& meta, const Table& table, bool as_curve);

// Table builders. Values are converted to the units of `spec`.

Table poles_table(const PotentialSpec& spec, const std::vector<Pole>& poles);
Table observables_table(const PotentialSpec& spec, const std::vector<ObservablesRecord>& rows);
Table spectrum_table(const PotentialSpec& spec, const SpectrumCurve& curve, bool with_companions, bool zero_width);
Table interference_table(const PotentialSpec& spec, const InterferenceCurve& curve);
Table cross_section_table(const PotentialSpec& spec, const CrossSectionBundle& bundle);

/// Parse the rows of an observables table written by write_json.
std::vector<ObservablesRecord> table_from_json(const std::string& text);

/// A matplotlib script that plots every column of `csv_path` against the first.
std::string plot_script(const std::string& csv_path, const std::string& title);

}  // namespace dshell
