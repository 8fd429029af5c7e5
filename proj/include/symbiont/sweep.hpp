#pragma once

#include "symbiont/params.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symbiont {

inline constexpr std::string_view kLibraryVersion = "0.1.0";

/// One-parameter sweep over `axis`, evaluated with the closed forms. With
/// `verify` set, each row also runs the numeric oracle and appends an
/// `oracle_pass` column.
struct SweepSpec {
  Scenario base = reference_scenario();
  std::string axis;
  std::vector<double> grid;
  std::vector<std::string> outputs;
  bool verify = false;
};

struct SweepMetadata {
  ScenarioValues base;
  std::string timestamp;  // UTC, ISO 8601; never written to CSV
  std::string version;
};

struct SweepResult {
  std::vector<std::string> header;  // axis name followed by output names
  std::vector<std::vector<double>> rows;
  SweepMetadata metadata;
};

/// InvalidGridPoint: the grid point at `index` cannot be run.
class SweepError : public std::runtime_error {
 public:
  SweepError(std::size_t index, std::string reason);

  std::size_t index() const noexcept { return index_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t index_;
  std::string reason_;
};

/// Every name accepted in SweepSpec::outputs. Boolean outputs are 0/1.
const std::vector<std::string>& available_outputs();

/// Outputs used when a spec leaves the list empty.
const std::vector<std::string>& default_outputs();

/// `points` evenly spaced values from `from` to `to` inclusive.
std::vector<double> linear_grid(double from, double to, std::size_t points);

/// Rows come back in grid order whatever the worker count.
SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 0);

/// Two-axis sweep as repeated one-axis sweeps, one per outer value.
std::vector<SweepResult> run_nested_sweep(const SweepSpec& inner, const std::string& outer_axis,
                                          const std::vector<double>& outer_grid, unsigned threads = 0);

enum class ExportFormat { Csv, Json };

/// CSV: comma separated, header row, 12 significant digits, no metadata.
/// JSON: header, rows and metadata; doubles are written round-trip exact.
std::string export_result(const SweepResult& result, ExportFormat format);

/// Nested results. CSV stacks the blocks under one header led by the outer
/// axis; JSON is an array of single-sweep documents.
std::string export_results(const std::vector<SweepResult>& results, const std::string& outer_axis,
                           const std::vector<double>& outer_grid, ExportFormat format);

SweepResult parse_sweep_json(std::string_view text);

/// Parsed sweep specification file, including the optional outer axis.
struct SweepFile {
  SweepSpec spec;
  std::string outer_axis;
  std::vector<double> outer_grid;
};

/// Spec file format:
///   {"base": {scenario keys}, "axis": "p_g",
///    "grid": [..] | "range": {"from": 0, "to": 40, "points": 401},
///    "outputs": [..], "verify": false,
///    "outer": {"axis": "alpha", "grid": [..] | "range": {..}}}
/// Only "base" and "axis" plus one of grid/range are required.
SweepFile parse_sweep_file(std::string_view text);

}  // namespace symbiont
