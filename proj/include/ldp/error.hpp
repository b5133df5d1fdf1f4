#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ldp {

enum class ErrorKind {
  Syntax,
  InvalidArgument,
  NotNegativeDefinite,
  IndexMismatch,
  ZeroIncidence,
  UnsupportedConfiguration,
  ParamOutOfRange,
  AllDuVal,
  AmbiguousSupport,
  NonIntegralClass,
  RayOrthogonal,
  BadCharacteristic,
  NotSingularMember,
  MultipleSingularPoints,
  ZeroInput,
  UnknownName,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the Dynkin-notation parser; `offset` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error(ErrorKind::Syntax,
              "syntax error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace ldp
