//===--- Diagnostics.hpp - Frontend error reporting -------------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "minisa/SourceLocation.hpp"

#include <stdexcept>
#include <string>

namespace minisa {

enum class ErrorKind {
  LexicalError,
  SyntaxError,
  UndeclaredIdentifier,
  Redefinition,
  TypeMismatch,
  ArityMismatch,
  NonLvalueRefArgument,
  IndexOfNonArray,
};

const char *errorKindName(ErrorKind kind);

/// Thrown on the first lexical, syntax, or semantic error. The frontend
/// reports a single diagnostic per translation unit and does not recover.
class FrontendError : public std::runtime_error {
public:
  FrontendError(ErrorKind kind, SourceLocation loc, const std::string &message)
      : std::runtime_error(loc.str() + ": error: " + message), kind_(kind),
        loc_(std::move(loc)) {}

  ErrorKind kind() const { return kind_; }
  const SourceLocation &loc() const { return loc_; }

private:
  ErrorKind kind_;
  SourceLocation loc_;
};

inline const char *errorKindName(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::LexicalError:
    return "LexicalError";
  case ErrorKind::SyntaxError:
    return "SyntaxError";
  case ErrorKind::UndeclaredIdentifier:
    return "UndeclaredIdentifier";
  case ErrorKind::Redefinition:
    return "Redefinition";
  case ErrorKind::TypeMismatch:
    return "TypeMismatch";
  case ErrorKind::ArityMismatch:
    return "ArityMismatch";
  case ErrorKind::NonLvalueRefArgument:
    return "NonLvalueRefArgument";
  case ErrorKind::IndexOfNonArray:
    return "IndexOfNonArray";
  }
  return "Unknown";
}

} // namespace minisa
