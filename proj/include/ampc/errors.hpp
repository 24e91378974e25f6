#ifndef AMPC_ERRORS_HPP_
#define AMPC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ampc {

// Failure categories surfaced by the library. The CLI maps these to exit
// codes (usage -> 64, infeasible budget -> 2, everything else -> 70).
enum class ErrorKind {
  kInvalidArgument,
  kSingularMatrix,
  kSamplingFailure,
  kTruncationInfeasible,
  kInsufficientShares,
  kProtocolViolation,
  kIncompleteAggregation,
  kInfeasibleBudget,
  kUsage,
  kIo,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error invalid_argument(const std::string& what) {
  return Error(ErrorKind::kInvalidArgument, what);
}

}  // namespace ampc

#endif  // AMPC_ERRORS_HPP_
