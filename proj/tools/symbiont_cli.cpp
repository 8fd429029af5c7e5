// symbiont: command-line front end for the equilibrium, adoption, comparison,
// oracle verification and sweep analyses.
//
// Exit codes: 0 success, 1 oracle verification failure, 2 input validation
// failure, 3 I/O failure.

#include "symbiont/adoption.hpp"
#include "symbiont/comparison.hpp"
#include "symbiont/equilibrium.hpp"
#include "symbiont/io.hpp"
#include "symbiont/oracle.hpp"
#include "symbiont/params.hpp"
#include "symbiont/sweep.hpp"
#include "symbiont/verification.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace symbiont;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kInvalidInput = 2, kIoFailure = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string scenario_path;
  std::map<std::string, double> inline_values;
  std::string regime = "benchmark";
  std::string format = "table";
  std::string out_path;
  std::size_t draws = 0;
  std::uint64_t seed = 7;
  std::string sweep_spec;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write '" + out_path + "'");
}

// File values first, then inline flags on top.
Scenario load_scenario(const Options& opt) {
  ScenarioValues values;
  std::map<std::string, bool> present;
  if (!opt.scenario_path.empty()) {
    const std::string text = read_file(opt.scenario_path);
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParamError(ParamErrorKind::MalformedDocument, opt.scenario_path, e.what());
    }
    values = scenario_values_from_json(doc);
    for (const auto key : ScenarioValues::keys) present[std::string(key)] = true;
  }
  for (const auto& [key, value] : opt.inline_values) {
    values.at(key) = value;
    present[key] = true;
  }
  for (const auto key : ScenarioValues::keys) {
    if (!present[std::string(key)])
      throw ParamError(ParamErrorKind::MissingKey, std::string(key),
                       "missing scenario key (give --scenario or --" + std::string(key) + ")");
  }
  return validate_scenario(values);
}

using Table = std::vector<std::pair<std::string, std::string>>;

std::string render(const Table& table) {
  std::string out;
  for (const auto& [key, value] : table) {
    char line[256];
    std::snprintf(line, sizeof line, "%-32s %s\n", key.c_str(), value.c_str());
    out += line;
  }
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

int run_solve(const Options& opt) {
  const Scenario s = load_scenario(opt);
  Regime regime;
  if (opt.regime == "benchmark")
    regime = Regime::Benchmark;
  else if (opt.regime == "symbiosis")
    regime = Regime::Symbiosis;
  else
    throw ParamError(ParamErrorKind::MalformedDocument, "regime", "expected benchmark or symbiosis");
  const Equilibrium e = equilibrium(s, regime);
  if (opt.format == "json") {
    emit(to_json(e).dump(2) + "\n", opt.out_path);
    return kOk;
  }
  Table t{{"regime", std::string(to_string(e.regime))},
          {"q", fixed12(e.q)},
          {"p", fixed12(e.p)},
          {"profit", fixed12(e.profit)},
          {"cs", fixed12(e.cs)},
          {"ts", fixed12(e.ts)},
          {"poll", fixed12(e.poll)}};
  if (regime == Regime::Symbiosis) t.emplace_back("gross_profit", fixed12(e.gross_profit()));
  emit(render(t), opt.out_path);
  return kOk;
}

int run_compare(const Options& opt) {
  const Scenario s = load_scenario(opt);
  const ComparisonReport r = compare(s.market, s.tech);
  std::string text;
  if (opt.format == "json") {
    text = to_json(r).dump(2) + "\n";
  } else {
    std::string increases = yes_no(r.poll_increases);
    if (r.poll_at_boundary) increases += " (boundary)";
    Table t{{"delta_q", fixed12(r.delta_q)},
            {"delta_p", fixed12(r.delta_p)},
            {"delta_cs", fixed12(r.delta_cs)},
            {"delta_pi", fixed12(r.delta_pi)},
            {"delta_pi_net", fixed12(r.delta_pi_net)},
            {"delta_ts", fixed12(r.delta_ts)},
            {"delta_poll", fixed12(r.delta_poll)},
            {"gain_per_unit", fixed12(r.gain_per_unit)},
            {"ts_sufficient_condition", yes_no(r.ts_sufficient_condition)},
            {"poll_sign_lhs", fixed12(r.poll_sign_lhs)},
            {"poll_sign_rhs", r.degenerate_gain ? "undefined" : fixed12(r.poll_sign_rhs)},
            {"poll_increases", increases}};
    text = render(t);
    if (r.negative_symbiosis_poll) text += "notice: symbiosis pollution is negative (net environmental gain)\n";
  }
  if (r.degenerate_gain)
    std::cerr << "notice: DegenerateGain: d = p_g = 0, so both regimes coincide gross of c_g\n";
  emit(text, opt.out_path);
  return kOk;
}

int run_adoption(const Options& opt) {
  const Scenario s = load_scenario(opt);
  const AdoptionAnalysis a = classify_equilibria(s.market, s.tech);
  if (opt.format == "json") {
    emit(to_json(a).dump(2) + "\n", opt.out_path);
    return kOk;
  }
  const CutoffSensitivities sens = cutoff_sensitivities(s.market, s.tech);
  Table t{{"c_g", fixed12(s.tech.c_g())},
          {"cutoff_star", fixed12(a.cutoff_star)},
          {"cutoff_prime", fixed12(a.cutoff_prime)},
          {"deviation_profit_from_benchmark", fixed12(deviation_profit_from_benchmark(s.market, s.tech))},
          {"deviation_gain_from_benchmark", fixed12(a.deviation_gain_from_benchmark)},
          {"none_adopt_is_equilibrium", yes_no(a.none_adopt_is_equilibrium)},
          {"all_adopt_is_equilibrium", yes_no(a.all_adopt_is_equilibrium)},
          {"multiple_equilibria", yes_no(a.multiple_equilibria())},
          {"d_cutoff_star/d_alpha", fixed12(sens.d_alpha)},
          {"d_cutoff_star/d_p_g", fixed12(sens.d_p_g)},
          {"d_cutoff_star/d_n", fixed12(sens.d_n)}};
  emit(render(t), opt.out_path);
  return kOk;
}

int run_verify(const Options& opt) {
  if (opt.draws > 0) {
    const CampaignSummary summary = run_campaign(opt.draws, opt.seed);
    if (!opt.out_path.empty()) {
      std::string lines;
      for (const auto& rec : summary.records) lines += to_json(rec).dump() + "\n";
      emit(lines, opt.out_path);
    }
    std::cout << summary.passed << "/" << summary.draws << " pass\n";
    return summary.passed == summary.draws ? kOk : kVerifyFailed;
  }

  const Scenario s = load_scenario(opt);
  const VerificationRecord rec = verify_scenario(s);
  if (opt.format == "json") {
    emit(to_json(rec).dump() + "\n", opt.out_path);
  } else {
    std::string text;
    for (const CheckResult& c : rec.checks) {
      char line[256];
      std::snprintf(line, sizeof line, "%-4s %-40s rel_error=%s\n", c.passed ? "ok" : "FAIL", c.name.c_str(),
                    sig12(c.rel_error).c_str());
      text += line;
    }
    if (!rec.error.empty()) text += "error: " + rec.error + "\n";
    text += rec.passed() ? "verification passed\n" : "verification FAILED\n";
    emit(text, opt.out_path);
  }
  return rec.passed() ? kOk : kVerifyFailed;
}

int run_sweep_command(const Options& opt) {
  const SweepFile file = parse_sweep_file(read_file(opt.sweep_spec));
  ExportFormat format;
  if (opt.format == "csv" || opt.format == "table")
    format = ExportFormat::Csv;
  else if (opt.format == "json")
    format = ExportFormat::Json;
  else
    throw ParamError(ParamErrorKind::MalformedDocument, "format", "expected csv or json");

  std::string text;
  if (file.outer_axis.empty()) {
    text = export_result(run_sweep(file.spec), format);
  } else {
    const auto results = run_nested_sweep(file.spec, file.outer_axis, file.outer_grid);
    text = export_results(results, file.outer_axis, file.outer_grid, format);
  }
  emit(text, opt.out_path);
  return kOk;
}

void add_scenario_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--scenario", opt.scenario_path, "Scenario JSON file (keys a,b,c,n,d,g,alpha,k,p_g,c_g)");
  for (const auto key : ScenarioValues::keys) {
    const std::string name(key);
    cmd->add_option_function<double>(
        "--" + name, [&opt, name](const double& v) { opt.inline_values[name] = v; },
        "Scenario parameter " + name + " (overrides the file)");
  }
  cmd->add_option("--out", opt.out_path, "Write output to PATH instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Competitive equilibrium with and without industrial symbiosis.\n"
               "Scenario values: inline --<key> flags override --scenario file values."};
  app.require_subcommand(1);
  Options opt;

  auto* solve = app.add_subcommand("solve", "Print one regime's equilibrium");
  add_scenario_flags(solve, opt);
  solve->add_option("--regime", opt.regime, "benchmark | symbiosis")->check(CLI::IsMember({"benchmark", "symbiosis"}));
  solve->add_option("--format", opt.format, "table | json")->check(CLI::IsMember({"table", "json"}));

  auto* cmp = app.add_subcommand("compare", "Print regime gaps and pollution sign condition");
  add_scenario_flags(cmp, opt);
  cmp->add_option("--format", opt.format, "table | json")->check(CLI::IsMember({"table", "json"}));

  auto* adopt = app.add_subcommand("adoption", "Print adoption cutoffs and equilibrium profiles");
  add_scenario_flags(adopt, opt);
  adopt->add_option("--format", opt.format, "table | json")->check(CLI::IsMember({"table", "json"}));

  auto* verify = app.add_subcommand("verify", "Check closed forms against the numeric oracle");
  add_scenario_flags(verify, opt);
  verify->add_option("--format", opt.format, "table | json")->check(CLI::IsMember({"table", "json"}));
  verify->add_option("--draws", opt.draws, "Run a random campaign of N scenarios instead");
  verify->add_option("--seed", opt.seed, "Campaign seed")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "Run a sweep specification and export the table");
  sweep->add_option("spec", opt.sweep_spec, "Sweep specification JSON")->required();
  sweep->add_option("--format", opt.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", opt.out_path, "Write output to PATH instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    if (solve->parsed()) return run_solve(opt);
    if (cmp->parsed()) return run_compare(opt);
    if (adopt->parsed()) return run_adoption(opt);
    if (verify->parsed()) return run_verify(opt);
    if (sweep->parsed()) return run_sweep_command(opt);
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const SweepError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const OracleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}
