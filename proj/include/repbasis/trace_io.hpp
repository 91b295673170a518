#pragma once

// Canonical JSON for targets, traces and reports (sorted keys, integers only
// in trace files) and the CSV density table.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "repbasis/construct.hpp"
#include "repbasis/verify.hpp"

namespace repbasis {

nlohmann::json to_json(const RepTarget& f);
RepTarget rep_target_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ConstructionTrace& trace);
ConstructionTrace trace_from_json(const nlohmann::json& j);

// Byte-stable serialization, newline terminated.
std::string write_trace(const ConstructionTrace& trace);
ConstructionTrace parse_trace(std::string_view text);

nlohmann::json to_json(const InvariantReport& report);

// One row per checkpoint: l, x, A(-x, x), sqrt(x)/phi(x), their ratio and the
// ceiling sqrt(2 r (4x + 1)) with r the largest finite value of f.
std::string stats_csv(const ConstructionTrace& trace);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace repbasis
