#include <fstream>
#include <sstream>
#include <string>

#include "subdiv/errors.hpp"
#include "subdiv/graph.hpp"

namespace subdiv {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  fail(errc::parse_error, "line " + std::to_string(line_no) + ": " + what);
}

// Strips '#' comments and surrounding whitespace; empty result means the
// line carries no data.
std::string data_part(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

bool read_two_ints(const std::string& text, long long& a, long long& b) {
  std::istringstream iss(text);
  std::string trailing;
  if (!(iss >> a >> b)) return false;
  if (iss >> trailing) return false;
  return true;
}

}  // namespace

EdgeListData read_edge_list_data(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = 0, m = 0;
  bool have_header = false;
  EdgeListData data;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = data_part(line);
    if (text.empty()) continue;
    long long a = 0, b = 0;
    if (!read_two_ints(text, a, b)) parse_fail(line_no, "expected two integers, got \"" + text + "\"");
    if (!have_header) {
      n = a;
      m = b;
      if (n < 2 || m < 0) parse_fail(line_no, "invalid header \"" + text + "\"");
      have_header = true;
      data.edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (static_cast<long long>(data.edges.size()) == m)
      parse_fail(line_no, "more edges than the header declared");
    data.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (!have_header) fail(errc::parse_error, "empty input: missing \"n m\" header");
  if (static_cast<long long>(data.edges.size()) != m)
    fail(errc::parse_error, "header declared " + std::to_string(m) + " edges, found " +
                                std::to_string(data.edges.size()));
  data.node_count = static_cast<int>(n);
  return data;
}

EdgeListData load_edge_list_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open " + path);
  try {
    return read_edge_list_data(in);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.message());
  }
}

Graph read_edge_list(std::istream& in) {
  const EdgeListData data = read_edge_list_data(in);
  return Graph::build(data.node_count, data.edges);
}

Graph load_edge_list(const std::string& path) {
  const EdgeListData data = load_edge_list_data(path);
  try {
    return Graph::build(data.node_count, data.edges);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.message());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void save_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) fail(errc::io_error, "cannot open " + path + " for writing");
  write_edge_list(out, g);
  if (!out) fail(errc::io_error, "write failed for " + path);
}

}  // namespace subdiv
