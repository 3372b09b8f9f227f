#pragma once

#include <stdexcept>
#include <string>

namespace tgha {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

class ConductorMismatch : public Error {
public:
  using Error::Error;
};

class NotASubfield : public Error {
public:
  using Error::Error;
};

class GroupTooLarge : public Error {
public:
  using Error::Error;
};

class SingularGenerator : public Error {
public:
  using Error::Error;
};

class DegenerateCase : public Error {
public:
  using Error::Error;
};

class NotRootOfUnity : public Error {
public:
  using Error::Error;
};

/// Raised by TwoCocycle::require_valid; carries the formatted witness.
class CocycleError : public Error {
public:
  using Error::Error;
};

class WrongGroupShape : public Error {
public:
  using Error::Error;
};

class IdentityElement : public Error {
public:
  using Error::Error;
};

class InternalInconsistency : public Error {
public:
  using Error::Error;
};

class WrongCodimension : public Error {
public:
  using Error::Error;
};

class NotAdmissible : public Error {
public:
  using Error::Error;
};

class InconsistentPropagation : public Error {
public:
  using Error::Error;
};

/// A form family failed verification where a verified one is required.
class FamilyError : public Error {
public:
  using Error::Error;
};

class DegreeLawViolation : public Error {
public:
  using Error::Error;
};

/// Malformed input text; `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

} // namespace tgha
