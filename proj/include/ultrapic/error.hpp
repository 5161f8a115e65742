#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ultrapic {

enum class Errc {
  DuplicateExponent,
  MalformedCertificate,
  ContextMismatch,
  UnsupportedTail,
  PoleAtOrigin,
  WindowInsufficient,
  ZeroSeries,
  NonConvergent,
  NotLiftable,
  PrecisionExhausted,
  ConstantFunction,
  HypothesisViolated,
  ContradictionDetected,
  NonPrime,
  InvalidArgument,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure the library reports carries one of the codes above; callers
// (notably the CLI exit-code mapping) switch on code() rather than on text.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ultrapic
