#include "subdiv/report.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "subdiv/errors.hpp"

namespace subdiv {

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open " + path);
  Config config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string text = line.substr(0, line.find('#'));
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = text.find_last_not_of(" \t\r");
    text = text.substr(begin, end - begin + 1);
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      fail(errc::parse_error, path + ": line " + std::to_string(line_no) + ": expected key=value");
    const std::string key = text.substr(0, eq);
    const std::string value = text.substr(eq + 1);
    try {
      if (key == "node_cap") {
        config.node_cap = std::stoi(value);
      } else if (key == "eig_tolerance") {
        config.eig_tolerance = std::stod(value);
      } else {
        fail(errc::parse_error, path + ": line " + std::to_string(line_no) + ": unknown key \"" + key + "\"");
      }
    } catch (const std::invalid_argument&) {
      fail(errc::parse_error, path + ": line " + std::to_string(line_no) + ": bad value \"" + value + "\"");
    }
  }
  return config;
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

nlohmann::ordered_json report_skeleton(const Config& config) {
  nlohmann::ordered_json doc;
  doc["schema"] = kSchemaTag;
  doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  doc["config"] = {{"node_cap", config.node_cap},
                   {"eig_tolerance", format_double(config.eig_tolerance)}};
  return doc;
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["graph"] = report.graph;
  doc["q"] = report.q;
  doc["check"] = report.check;
  doc["residual"] = format_double(report.residual);
  doc["tolerance"] = format_double(report.tolerance);
  doc["pass"] = report.pass;
  doc["statistical"] = report.statistical;
  doc["wall_seconds"] = format_double(report.wall_seconds);
  if (!report.note.empty()) doc["note"] = report.note;
  return doc;
}

std::string render_table(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(14) << "graph" << std::setw(4) << "q" << std::setw(26) << "check"
      << std::setw(13) << "residual" << std::setw(11) << "tolerance" << std::setw(9) << "time"
      << "status\n";
  int failures = 0;
  for (const VerificationReport& r : reports) {
    std::ostringstream residual, tolerance, wall;
    residual << std::scientific << std::setprecision(2) << r.residual;
    tolerance << std::scientific << std::setprecision(0) << r.tolerance;
    wall << std::fixed << std::setprecision(3) << r.wall_seconds << "s";
    out << std::left << std::setw(14) << r.graph << std::setw(4) << r.q << std::setw(26) << r.check
        << std::setw(13) << residual.str() << std::setw(11) << tolerance.str() << std::setw(9)
        << wall.str() << (r.pass ? "pass" : (r.statistical ? "FAIL(stat)" : "FAIL"));
    if (!r.note.empty()) out << "  [" << r.note << "]";
    out << "\n";
    if (!r.pass && !r.statistical) ++failures;
  }
  out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
      << " (" << reports.size() << " cells)\n";
  return out.str();
}

}  // namespace subdiv
