#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "repbasis/construct.hpp"

namespace repbasis::cli {

enum class Subcommand { kBuild, kVerify, kSidon, kStats };

struct RunConfig {
  Subcommand subcommand = Subcommand::kBuild;
  std::string target_path;  // build --f
  std::string trace_path;   // verify/stats --trace
  std::string out_path;     // build/stats --out, verify --report; empty = stdout
  std::string phi = "log2";
  std::size_t stages = 1;
  SearchOptions search;
  std::string sidon_method = "auto";
  std::int64_t sidon_n = 1;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitError = 2;

// Parses argv into a RunConfig. Returns nullopt after printing help or a
// usage error; `exit_code` then holds the status to return.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace repbasis::cli
