#pragma once

#include <stdexcept>
#include <string>

namespace anglechain {

// Base for all library errors so callers can catch one type.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Angle undefined: a repeated vertex point in a triple.
class DegenerateAngleError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Value outside the admissible range, e.g. an angle not in (0, pi).
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

// Pin/method/semantics combination not representable by the query.
class QueryInvalidError : public Error {
 public:
  using Error::Error;
};

class UnsupportedSemanticsError : public Error {
 public:
  using Error::Error;
};

class DuplicatePointsError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

class DegenerateFitError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace anglechain
