// error.hpp - error codes and the exception type shared by every module.

#ifndef DISTRECON_ERROR_HPP
#define DISTRECON_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace distrecon {

enum class Errc {
  self_loop,
  duplicate_edge,
  vertex_out_of_range,
  not_connected,
  odd_degree_sum,
  degree_too_large,
  attempts_exhausted,
  too_small,
  parse_error,
  contract_violation,
  bad_policy,
  max_iters_exceeded,
  too_large,
  no_non_adjacent_pairs,
  bad_config,
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::self_loop: return "SelfLoop";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::vertex_out_of_range: return "VertexOutOfRange";
    case Errc::not_connected: return "NotConnected";
    case Errc::odd_degree_sum: return "OddDegreeSum";
    case Errc::degree_too_large: return "DegreeTooLarge";
    case Errc::attempts_exhausted: return "AttemptsExhausted";
    case Errc::too_small: return "TooSmall";
    case Errc::parse_error: return "ParseError";
    case Errc::contract_violation: return "ContractViolation";
    case Errc::bad_policy: return "BadPolicy";
    case Errc::max_iters_exceeded: return "MaxItersExceeded";
    case Errc::too_large: return "TooLarge";
    case Errc::no_non_adjacent_pairs: return "NoNonAdjacentPairs";
    case Errc::bad_config: return "BadConfig";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace distrecon

#endif  // DISTRECON_ERROR_HPP
