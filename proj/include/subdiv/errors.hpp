#pragma once

#include <stdexcept>
#include <string>

namespace subdiv {

enum class errc {
  invalid_argument,
  self_loop,
  duplicate_edge,
  disconnected,
  index_out_of_range,
  size_limit,
  parse_error,
  io_error,
  not_symmetric,
  no_convergence,
  degenerate_transfer,
  degenerate_spectrum,
  rank_mismatch,
  same_node,
  singular_system,
  step_budget_exceeded,
  method_unavailable,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& message);
  errc code() const { return code_; }
  const std::string& message() const { return message_; }

private:
  errc code_;
  std::string message_;
};

[[noreturn]] void fail(errc code, const std::string& message);

}  // namespace subdiv
