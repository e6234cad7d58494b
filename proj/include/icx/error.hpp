#pragma once

#include <stdexcept>
#include <string>

namespace icx {

enum class ErrorKind {
  InvalidDegree,
  ParseError,
  DegreeMismatch,
  ResourceLimit,
  NotSubgroup,
  InvalidSystem,
  InvalidPoset,
  InvalidSection,
  NotACGroup,
  InvalidAction,
  InternalInconsistency,
  UnsupportedType,
  NotPolytopeSystem,
  NotPolytopeComplex,
  InvalidInput,
  IoError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace icx
