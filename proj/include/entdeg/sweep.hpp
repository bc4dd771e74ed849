#pragma once

// Parameter sweeps behind the reproduction CLI: one quantity evaluated over a
// rectangular grid, collected into a table and written as CSV plus a gnuplot
// script.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace entdeg::sweep {

enum class Quantity {
  BsEntangle,
  BsLossyBound,
  FiberEstimate,
  FiberBound,
  FiberDistance,
  Compare,
  AvailableEntanglement,
};

const char* to_string(Quantity q);
/// Throws SpecError for unknown names.
Quantity parse_quantity(const std::string& name);

enum class Units { Nats, Bits };

struct Axis {
  std::string name;
  std::vector<double> values;
};

/// "name=min:max:steps" (linear, steps >= 2) or "name=v1,v2,...".
Axis parse_axis(const std::string& text);

struct SweepSpec {
  Quantity quantity = Quantity::FiberDistance;
  std::vector<Axis> axes;
  std::map<std::string, double> params;
  std::optional<int> cutoff;
  std::uint64_t seed = 20010601;
  Units units = Units::Nats;
  int jobs = 1;
};

/// Throws SpecError when axes or parameters do not fit the quantity.
void validate(const SweepSpec& spec);

struct ResultTable {
  std::string quantity;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  /// Per-row error text; empty when the point succeeded.
  std::vector<std::string> errors;
  std::vector<std::pair<std::string, std::string>> metadata;

  bool has_errors() const;
};

/// Evaluates every grid point (first axis slowest). Per-point failures give
/// NaN values and an error entry; the sweep itself never aborts on them.
ResultTable run_sweep(const SweepSpec& spec);

/// Figure presets: fig2, fig3, fig4, fig6, fig7, fig8, fig9, fig10, fig11.
SweepSpec preset(const std::string& name);
std::vector<std::string> preset_names();

/// '#'-prefixed metadata, header, rows with 12 significant digits. Throws
/// IoError when the file cannot be written.
void emit_csv(const ResultTable& table, const std::string& path);
std::string format_csv(const ResultTable& table, bool include_wall_time = true);

/// Gnuplot script plotting the CSV at `csv_path`.
void emit_plotscript(const ResultTable& table, const std::string& csv_path, const std::string& path);
std::string format_plotscript(const ResultTable& table, const std::string& csv_path);

}  // namespace entdeg::sweep
