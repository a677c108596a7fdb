#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nzalex {

enum class ErrorKind {
  MalformedInput,
  BadGluing,
  NotTorusBoundary,
  NotOrientable,
  NotOrdered,
  NotOrderable,
  RankDeficient,
  NoKernel,
  InvalidAlpha,
  NotSquare,
  DivisionByZero,
  NotARepresentation,
  NotSL,
  InternalDivisionFailure,
  InvariantViolation,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nzalex
