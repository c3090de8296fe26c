#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace omegalie {

enum class ErrorKind {
  DivisionByZero,
  DescriptorMismatch,
  InvalidField,
  ParseError,
  ZeroInput,
  ExtensionRequired,
  SingularMatrix,
  InconsistentSystem,
  ShapeMismatch,
  NotSkew,
  LengthMismatch,
  ZeroPolynomial,
  NotAGroebnerBasis,
  RingMismatch,
  InexactDivision,
  UnitIdeal,
  IndexOutOfRange,
  DimensionTooSmall,
  DimensionMismatch,
  WrongDimension,
  UnsupportedDimension,
  NotOmegaLie,
  IsLie,
  InvalidAlpha,
  Internal,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::ExtensionRequired: return "ExtensionRequired";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::InconsistentSystem: return "InconsistentSystem";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotAGroebnerBasis: return "NotAGroebnerBasis";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::UnitIdeal: return "UnitIdeal";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::NotOmegaLie: return "NotOmegaLie";
    case ErrorKind::IsLie: return "IsLie";
    case ErrorKind::InvalidAlpha: return "InvalidAlpha";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

/// All library failures are reported through this type; `kind()` names the
/// failure category so callers (and the CLI) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace omegalie
