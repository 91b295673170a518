#include "repbasis/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "repbasis/sidon.hpp"
#include "repbasis/trace_io.hpp"
#include "repbasis/verify.hpp"

namespace repbasis::cli {

namespace {

std::int64_t default_search_cap() {
  if (const char* env = std::getenv("REPBASIS_SEARCH_CAP")) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::kParse, std::string("REPBASIS_SEARCH_CAP is not a positive integer: ") + env);
  }
  return kDefaultSearchCap;
}

void emit(const RunConfig& config, std::string_view text, std::ostream& out) {
  if (config.out_path.empty()) {
    out << text;
  } else {
    write_text_file(config.out_path, text);
  }
}

int run_build(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const RepTarget f =
      rep_target_from_json(nlohmann::json::parse(read_text_file(config.target_path)));
  const PhiSpec phi = PhiSpec::parse(config.phi);
  try {
    const ConstructionTrace trace = build(f, phi, config.stages, config.search);
    emit(config, write_trace(trace), out);
    return kExitOk;
  } catch (const BuildHalted& halted) {
    err << "build: " << halted.what() << "\n";
    err << "build: " << halted.partial().stages.size() << " of " << 2 * config.stages + 1
        << " stages completed\n";
    return kExitError;
  }
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const ConstructionTrace trace = parse_trace(read_text_file(config.trace_path));
  const InvariantReport report = verify_trace(trace);
  emit(config, to_json(report).dump(2) + "\n", out);
  if (const CheckResult* bad = report.first_failure()) {
    err << "verify: " << report.failures() << " check(s) failed; first: " << bad->name;
    if (bad->stage) err << " at stage " << *bad->stage;
    if (bad->witness) err << " (witness " << *bad->witness << ")";
    err << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int run_sidon(const RunConfig& config, std::ostream& out) {
  SidonSet d;
  if (config.sidon_method == "greedy") {
    d = greedy_sidon(config.sidon_n);
  } else if (config.sidon_method == "erdos-turan") {
    d = erdos_turan_sidon(config.sidon_n);
  } else {
    d = best_sidon(config.sidon_n);
  }
  const long double half_root = std::sqrt(static_cast<long double>(config.sidon_n)) / 2.0L;
  nlohmann::json j{{"method", config.sidon_method},
                   {"n", config.sidon_n},
                   {"set", d.elements},
                   {"size", d.size()},
                   {"half_sqrt_n", static_cast<double>(half_root)},
                   {"dense", strictly_exceeds(static_cast<long double>(d.size()), half_root)},
                   {"sidon", is_sidon(d.elements)}};
  out << j.dump() << "\n";
  return kExitOk;
}

int run_stats(const RunConfig& config, std::ostream& out) {
  const ConstructionTrace trace = parse_trace(read_text_file(config.trace_path));
  emit(config, stats_csv(trace), out);
  return kExitOk;
}

}  // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code) {
  RunConfig config;
  config.search.search_cap = default_search_cap();
  std::string rule = "direct";

  CLI::App app{"Staged construction of integer bases with a prescribed representation function"};
  app.require_subcommand(1);

  auto* build_cmd = app.add_subcommand("build", "construct stages A_1 .. A_{2L+1} and write a trace");
  build_cmd->add_option("--f", config.target_path, "target function JSON")->required()->check(CLI::ExistingFile);
  build_cmd->add_option("--phi", config.phi, "log2 | ln | pow:<e> | clog:<c>");
  build_cmd->add_option("--stages", config.stages, "number of induction rounds L")->check(CLI::PositiveNumber);
  build_cmd->add_option("--out", config.out_path, "trace output path (default stdout)");
  build_cmd->add_option("--search-cap", config.search.search_cap, "largest checkpoint examined")
      ->check(CLI::PositiveNumber);
  build_cmd->add_option("--checkpoint-rule", rule, "direct | proof")
      ->check(CLI::IsMember({"direct", "proof"}));

  auto* verify_cmd = app.add_subcommand("verify", "check every invariant of a trace");
  verify_cmd->add_option("--trace", config.trace_path)->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--report", config.out_path, "report output path (default stdout)");

  auto* sidon_cmd = app.add_subcommand("sidon", "print a Sidon set in [1, n]");
  sidon_cmd->add_option("--method", config.sidon_method)
      ->check(CLI::IsMember({"greedy", "erdos-turan", "auto"}));
  sidon_cmd->add_option("--n", config.sidon_n)->required()->check(CLI::PositiveNumber);

  auto* stats_cmd = app.add_subcommand("stats", "write the checkpoint density table as CSV");
  stats_cmd->add_option("--trace", config.trace_path)->required()->check(CLI::ExistingFile);
  stats_cmd->add_option("--out", config.out_path, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e, out, err);
    if (exit_code == 0) return std::nullopt;
    exit_code = kExitError;
    return std::nullopt;
  }

  config.search.rule = parse_checkpoint_rule(rule);
  if (build_cmd->parsed()) config.subcommand = Subcommand::kBuild;
  if (verify_cmd->parsed()) config.subcommand = Subcommand::kVerify;
  if (sidon_cmd->parsed()) config.subcommand = Subcommand::kSidon;
  if (stats_cmd->parsed()) config.subcommand = Subcommand::kStats;
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.subcommand) {
      case Subcommand::kBuild: return run_build(config, out, err);
      case Subcommand::kVerify: return run_verify(config, out, err);
      case Subcommand::kSidon: return run_sidon(config, out);
      case Subcommand::kStats: return run_stats(config, out);
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << "PARSE_ERROR: " << e.what() << "\n";
  }
  return kExitError;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  int exit_code = kExitOk;
  try {
    auto config = parse_args(argc, argv, out, err, exit_code);
    if (!config) return exit_code;
    return run(*config, out, err);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace repbasis::cli
