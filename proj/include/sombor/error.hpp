#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sombor {

enum class Errc {
  OutOfRange,
  DuplicateEdge,
  SelfLoop,
  Disconnected,
  Acyclic,
  NotUnicyclic,
  TooLarge,
  InvalidDegree,
  TooSmall,
  InvalidParameters,
  NotAnEdge,
  DegreeTooLow,
  CommonNeighbor,
  RemovalMissing,
  AdditionExists,
  EmptyClass,
  OutOfTheoremRange,
  BadGrid,
  UnknownConstant,
  InvalidAlpha,
  ParseError,
};

std::string_view to_string(Errc code);

// Every failure in the library is reported through this type; `code()` is
// the machine-readable part, `what()` carries context for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sombor
