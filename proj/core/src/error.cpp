#include "nzalex/error.hpp"

namespace nzalex {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::BadGluing: return "BadGluing";
    case ErrorKind::NotTorusBoundary: return "NotTorusBoundary";
    case ErrorKind::NotOrientable: return "NotOrientable";
    case ErrorKind::NotOrdered: return "NotOrdered";
    case ErrorKind::NotOrderable: return "NotOrderable";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NoKernel: return "NoKernel";
    case ErrorKind::InvalidAlpha: return "InvalidAlpha";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotARepresentation: return "NotARepresentation";
    case ErrorKind::NotSL: return "NotSL";
    case ErrorKind::InternalDivisionFailure: return "InternalDivisionFailure";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace nzalex
