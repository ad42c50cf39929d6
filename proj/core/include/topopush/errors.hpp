#pragma once

#include <stdexcept>
#include <string>

namespace topopush {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed scene or plan document (syntax).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Scene that parses but violates a feasibility invariant.
class InfeasibleScene : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

/// No incidence angle in the search grid lets the path region fit between the walls.
class NoValidRegion : public Error {
 public:
  using Error::Error;
};

/// The path region contains no obstacle.
class EmptyRegion : public Error {
 public:
  using Error::Error;
};

class NoisyInfeasible : public Error {
 public:
  using Error::Error;
};

/// Planner precondition violated (infeasible start or start already clear).
class InvalidStart : public Error {
 public:
  using Error::Error;
};

class GenerationFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace topopush
