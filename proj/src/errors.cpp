#include "subdiv/errors.hpp"

namespace subdiv {

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::self_loop: return "SelfLoop";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::disconnected: return "Disconnected";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::size_limit: return "SizeLimit";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::no_convergence: return "NoConvergence";
    case errc::degenerate_transfer: return "DegenerateTransfer";
    case errc::degenerate_spectrum: return "DegenerateSpectrum";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::same_node: return "SameNode";
    case errc::singular_system: return "SingularSystem";
    case errc::step_budget_exceeded: return "StepBudgetExceeded";
    case errc::method_unavailable: return "MethodUnavailable";
  }
  return "UnknownError";
}

Error::Error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      message_(message) {}

void fail(errc code, const std::string& message) { throw Error(code, message); }

}  // namespace subdiv
