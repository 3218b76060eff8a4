#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "subdiv/suite.hpp"

namespace subdiv {

inline constexpr const char* kSchemaTag = "subdiv-lab/1";
inline constexpr const char* kToolName = "subdiv";
inline constexpr const char* kToolVersion = "0.1.0";

/// Caps and tolerances settable through the optional key=value config file;
/// everything science-related stays on the command line.
struct Config {
  int node_cap = kDefaultNodeCap;
  double eig_tolerance = 1e-12;
};

/// Parses "key=value" lines ('#' comments allowed). Unknown keys are parse
/// errors; recognized keys: node_cap, eig_tolerance.
Config load_config(const std::string& path);

/// Floats rendered with 17 significant digits; report values are strings so
/// that serialized output is byte-stable.
std::string format_double(double value);

/// Skeleton with schema, tool and config echo fields filled in.
nlohmann::ordered_json report_skeleton(const Config& config);

nlohmann::ordered_json to_json(const VerificationReport& report);

/// Aligned text table, one row per report.
std::string render_table(const std::vector<VerificationReport>& reports);

}  // namespace subdiv
