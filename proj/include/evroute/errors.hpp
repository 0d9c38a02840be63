#ifndef EVROUTE_ERRORS_HPP
#define EVROUTE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evroute {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
  public:
    using Error::Error;
};

// Label relaxation ran past its round bound: a negative cycle or a
// pathological instance.
class RoundGuardExceeded : public Error {
  public:
    using Error::Error;
};

class ExplosionGuard : public Error {
  public:
    using Error::Error;
};

class NegativeScalarCycle : public Error {
  public:
    using Error::Error;
};

class Unreachable : public Error {
  public:
    using Error::Error;
};

class NoFeasibleRoute : public Error {
  public:
    using Error::Error;
};

class InvalidArgument : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(const std::string &what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_{line} {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

class UnknownClass : public ParseError {
  public:
    using ParseError::ParseError;
};

class NonPositiveLength : public ParseError {
  public:
    using ParseError::ParseError;
};

class GuardExceeded : public Error {
  public:
    using Error::Error;
};

} // namespace evroute

#endif
