#include "symbiont/sweep.hpp"

#include "parallel.hpp"
#include "symbiont/adoption.hpp"
#include "symbiont/comparison.hpp"
#include "symbiont/equilibrium.hpp"
#include "symbiont/io.hpp"
#include "symbiont/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <limits>
#include <map>
#include <optional>

namespace symbiont {

using nlohmann::json;

SweepError::SweepError(std::size_t index, std::string reason)
    : std::runtime_error("InvalidGridPoint(" + std::to_string(index) + ", " + reason + ")"),
      index_(index),
      reason_(std::move(reason)) {}

namespace {

struct Row {
  Equilibrium bench;
  Equilibrium symb;
  ComparisonReport report;
  AdoptionAnalysis adoption;
};

using Extractor = std::function<double(const Row&)>;

double flag(bool b) { return b ? 1.0 : 0.0; }

const std::vector<std::pair<std::string, Extractor>>& catalog() {
  static const std::vector<std::pair<std::string, Extractor>> entries = [] {
    std::vector<std::pair<std::string, Extractor>> e;
    const auto per_regime = [&](const char* field, double Equilibrium::*member) {
      e.emplace_back(std::string(field) + "_benchmark", [member](const Row& r) { return r.bench.*member; });
      e.emplace_back(std::string(field) + "_symbiosis", [member](const Row& r) { return r.symb.*member; });
    };
    per_regime("q", &Equilibrium::q);
    per_regime("p", &Equilibrium::p);
    per_regime("profit", &Equilibrium::profit);
    per_regime("cs", &Equilibrium::cs);
    per_regime("ts", &Equilibrium::ts);
    per_regime("poll", &Equilibrium::poll);
    e.emplace_back("delta_q", [](const Row& r) { return r.report.delta_q; });
    e.emplace_back("delta_p", [](const Row& r) { return r.report.delta_p; });
    e.emplace_back("delta_cs", [](const Row& r) { return r.report.delta_cs; });
    e.emplace_back("delta_pi", [](const Row& r) { return r.report.delta_pi; });
    e.emplace_back("delta_pi_net", [](const Row& r) { return r.report.delta_pi_net; });
    e.emplace_back("delta_ts", [](const Row& r) { return r.report.delta_ts; });
    e.emplace_back("delta_poll", [](const Row& r) { return r.report.delta_poll; });
    e.emplace_back("gain_per_unit", [](const Row& r) { return r.report.gain_per_unit; });
    e.emplace_back("poll_sign_lhs", [](const Row& r) { return r.report.poll_sign_lhs; });
    e.emplace_back("poll_sign_rhs", [](const Row& r) { return r.report.poll_sign_rhs; });
    e.emplace_back("poll_increases", [](const Row& r) { return flag(r.report.poll_increases); });
    e.emplace_back("ts_sufficient_condition", [](const Row& r) { return flag(r.report.ts_sufficient_condition); });
    e.emplace_back("cutoff_star", [](const Row& r) { return r.adoption.cutoff_star; });
    e.emplace_back("cutoff_prime", [](const Row& r) { return r.adoption.cutoff_prime; });
    e.emplace_back("none_adopt_is_equilibrium",
                   [](const Row& r) { return flag(r.adoption.none_adopt_is_equilibrium); });
    e.emplace_back("all_adopt_is_equilibrium",
                   [](const Row& r) { return flag(r.adoption.all_adopt_is_equilibrium); });
    return e;
  }();
  return entries;
}

const Extractor& extractor(const std::string& name) {
  for (const auto& [key, fn] : catalog()) {
    if (key == name) return fn;
  }
  throw std::invalid_argument("unknown sweep output '" + name + "'");
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<Scenario> validate_grid(const SweepSpec& spec) {
  if (spec.grid.empty()) throw SweepError(0, "empty grid");
  if (!ScenarioValues::is_key(spec.axis))
    throw ParamError(ParamErrorKind::UnknownKey, spec.axis, "not a sweepable parameter");
  std::vector<Scenario> points;
  points.reserve(spec.grid.size());
  ScenarioValues values = spec.base.values();
  for (std::size_t i = 0; i < spec.grid.size(); ++i) {
    if (i > 0 && !(spec.grid[i] > spec.grid[i - 1])) throw SweepError(i, "grid not strictly increasing");
    values.at(spec.axis) = spec.grid[i];
    try {
      points.push_back(validate_scenario(values));
    } catch (const ParamError& e) {
      throw SweepError(i, e.what());
    }
  }
  return points;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  line += '\n';
  return line;
}

std::string csv_row(const std::vector<double>& row, std::optional<double> lead = std::nullopt) {
  std::vector<std::string> cells;
  if (lead) cells.push_back(sig12(*lead));
  for (const double v : row) cells.push_back(sig12(v));
  return csv_line(cells);
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json result_to_json(const SweepResult& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json out = json::array();
    for (const double v : row) out.push_back(number_or_null(v));
    rows.push_back(std::move(out));
  }
  return {{"header", r.header},
          {"rows", std::move(rows)},
          {"metadata",
           {{"base", to_json(r.metadata.base)},
            {"timestamp", r.metadata.timestamp},
            {"version", r.metadata.version}}}};
}

std::vector<double> grid_from_json(const json& doc, const char* where) {
  if (doc.contains("grid")) return doc.at("grid").get<std::vector<double>>();
  if (doc.contains("range")) {
    const json& range = doc.at("range");
    return linear_grid(range.at("from").get<double>(), range.at("to").get<double>(),
                       range.at("points").get<std::size_t>());
  }
  throw std::invalid_argument(std::string(where) + ": expected \"grid\" or \"range\"");
}

}  // namespace

const std::vector<std::string>& available_outputs() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : catalog()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

const std::vector<std::string>& default_outputs() {
  static const std::vector<std::string> names{"q_benchmark",   "q_symbiosis",   "profit_benchmark",
                                              "profit_symbiosis", "poll_benchmark", "poll_symbiosis",
                                              "delta_poll",    "cutoff_star",   "cutoff_prime"};
  return names;
}

std::vector<double> linear_grid(double from, double to, std::size_t points) {
  if (points == 0) return {};
  if (points == 1) return {from};
  std::vector<double> grid(points);
  const double span = to - from;
  const double steps = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = from + span * static_cast<double>(i) / steps;
  grid.back() = to;
  return grid;
}

SweepResult run_sweep(const SweepSpec& spec, unsigned threads) {
  const std::vector<Scenario> points = validate_grid(spec);
  const std::vector<std::string>& outputs = spec.outputs.empty() ? default_outputs() : spec.outputs;
  std::vector<const Extractor*> columns;
  for (const auto& name : outputs) columns.push_back(&extractor(name));

  SweepResult result;
  result.header.push_back(spec.axis);
  result.header.insert(result.header.end(), outputs.begin(), outputs.end());
  if (spec.verify) result.header.emplace_back("oracle_pass");
  result.metadata = {spec.base.values(), utc_timestamp(), std::string(kLibraryVersion)};
  result.rows.resize(points.size());

  detail::parallel_for(points.size(), threads, [&](std::size_t i) {
    const Scenario& s = points[i];
    const Row row{benchmark_equilibrium(s.market), symbiosis_equilibrium(s.market, s.tech),
                  compare(s.market, s.tech), classify_equilibria(s.market, s.tech)};
    std::vector<double>& out = result.rows[i];
    out.reserve(columns.size() + 2);
    out.push_back(spec.grid[i]);
    for (const Extractor* column : columns) out.push_back((*column)(row));
    if (spec.verify) out.push_back(flag(verify_scenario(s).passed()));
  });
  return result;
}

std::vector<SweepResult> run_nested_sweep(const SweepSpec& inner, const std::string& outer_axis,
                                          const std::vector<double>& outer_grid, unsigned threads) {
  SweepSpec outer{inner.base, outer_axis, outer_grid, {}, false};
  const std::vector<Scenario> bases = validate_grid(outer);
  std::vector<SweepResult> results;
  results.reserve(bases.size());
  for (const Scenario& base : bases) {
    SweepSpec spec = inner;
    spec.base = base;
    results.push_back(run_sweep(spec, threads));
  }
  return results;
}

std::string export_result(const SweepResult& result, ExportFormat format) {
  if (format == ExportFormat::Json) return result_to_json(result).dump(2) + "\n";
  std::string out = csv_line(result.header);
  for (const auto& row : result.rows) out += csv_row(row);
  return out;
}

std::string export_results(const std::vector<SweepResult>& results, const std::string& outer_axis,
                           const std::vector<double>& outer_grid, ExportFormat format) {
  if (format == ExportFormat::Json) {
    json all = json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      json doc = result_to_json(results[i]);
      doc["outer"] = {{"axis", outer_axis}, {"value", outer_grid.at(i)}};
      all.push_back(std::move(doc));
    }
    return all.dump(2) + "\n";
  }
  if (results.empty()) return {};
  std::vector<std::string> header{outer_axis};
  header.insert(header.end(), results.front().header.begin(), results.front().header.end());
  std::string out = csv_line(header);
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (const auto& row : results[i].rows) out += csv_row(row, outer_grid.at(i));
  }
  return out;
}

SweepResult parse_sweep_json(std::string_view text) {
  const json doc = json::parse(text);
  SweepResult r;
  r.header = doc.at("header").get<std::vector<std::string>>();
  for (const json& row : doc.at("rows")) {
    std::vector<double> values;
    for (const json& v : row) values.push_back(v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>());
    r.rows.push_back(std::move(values));
  }
  const json& meta = doc.at("metadata");
  r.metadata.base = scenario_values_from_json(meta.at("base"));
  r.metadata.timestamp = meta.at("timestamp").get<std::string>();
  r.metadata.version = meta.at("version").get<std::string>();
  return r;
}

SweepFile parse_sweep_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParamError(ParamErrorKind::MalformedDocument, "<root>", e.what());
  }
  static const std::vector<std::string> allowed{"base", "axis", "grid", "range", "outputs", "verify", "outer"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ParamError(ParamErrorKind::UnknownKey, key, "unknown sweep spec key");
  }
  if (!doc.contains("base")) throw ParamError(ParamErrorKind::MissingKey, "base", "sweep spec needs a base scenario");
  if (!doc.contains("axis")) throw ParamError(ParamErrorKind::MissingKey, "axis", "sweep spec needs an axis");

  SweepFile file;
  try {
    file.spec.base = scenario_from_json(doc.at("base"));
    file.spec.axis = doc.at("axis").get<std::string>();
    file.spec.grid = grid_from_json(doc, "sweep spec");
    if (doc.contains("outputs")) file.spec.outputs = doc.at("outputs").get<std::vector<std::string>>();
    file.spec.verify = doc.value("verify", false);
    if (doc.contains("outer")) {
      const json& outer = doc.at("outer");
      file.outer_axis = outer.at("axis").get<std::string>();
      file.outer_grid = grid_from_json(outer, "outer axis");
    }
  } catch (const json::exception& e) {
    throw ParamError(ParamErrorKind::MalformedDocument, "<sweep spec>", e.what());
  }
  for (const auto& name : file.spec.outputs) extractor(name);
  return file;
}

}  // namespace symbiont
