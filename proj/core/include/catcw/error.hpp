#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace catcw {

enum class ErrorCode {
  DuplicateName,
  DanglingEndpoint,
  NonParallelRelation,
  UnknownName,
  BadPath,
  EmptySet,
  MixedDimensions,
  NotAnOpen,
  NotConnected,
  InvalidSpace,
  InvalidFunctor,
  InvalidTable,
  IncompleteSystem,
  NotDecided,
  SearchSpaceTooLarge,
  CertificateRejected,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Thrown when an operation's precondition is violated or its input is
/// malformed. Negative verdicts (not an equivalence, not finite, ...) are
/// returned as values instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Three-valued answer for questions that are only semi-decidable on
/// presentations.
enum class Decision { No, Yes, Unknown };

inline std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::No:
      return "no";
    case Decision::Yes:
      return "yes";
    case Decision::Unknown:
      return "unknown";
  }
  return "unknown";
}

}  // namespace catcw
