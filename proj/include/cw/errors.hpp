#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cw {

// Base class for everything this library throws on its own behalf.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPrimePower : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

struct ParamsOutOfRange : Error {
  using Error::Error;
};

// Parameters are structurally impossible (violate a proven bound), as opposed
// to merely outside this build's supported range.
struct ParamsInfeasible : Error {
  using Error::Error;
};

struct LengthMismatch : Error {
  using Error::Error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

struct TooFewWords : Error {
  using Error::Error;
};

struct EmptySet : Error {
  using Error::Error;
};

struct NotOA : Error {
  NotOA(const std::string& msg, std::vector<int> cols, std::vector<unsigned> tup)
      : Error(msg), columns(std::move(cols)), tuple(std::move(tup)) {}
  std::vector<int> columns;     // the first violating column set (0-based)
  std::vector<unsigned> tuple;  // the tuple whose count is off
};

struct KernelDimensionError : Error {
  using Error::Error;
};

struct NotFullWeight : Error {
  using Error::Error;
};

struct DerivationUndefined : Error {
  using Error::Error;
};

struct PreconditionViolated : Error {
  using Error::Error;
};

struct Unclassifiable : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, int line_no) : Error(msg), line(line_no) {}
  int line;  // 1-based line number in the offending file
};

struct InvariantViolation : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

}  // namespace cw
