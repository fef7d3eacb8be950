#pragma once

#include <stdexcept>
#include <string>

namespace mwa {

// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input validation failures (bad files, bad numbers, dimension mismatches).
class ValidationError : public Error {
public:
  using Error::Error;
};

class DegenerateShape : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class OriginNotInterior : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class DimensionTooHigh : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class EmptyCloud : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class DegenerateAnnulus : public Error {
public:
  using Error::Error;
};

class InvalidParameter : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class GridTooLarge : public Error {
public:
  GridTooLarge(const std::string& what, std::uint64_t required_cap)
      : Error(what), required_cap(required_cap) {}
  std::uint64_t required_cap;
};

class SlimnessDiverged : public Error {
public:
  SlimnessDiverged(const std::string& what, double best_width)
      : Error(what), best_width(best_width) {}
  double best_width;
};

class FacetUnsampled : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class TooLargeForOracle : public Error {
public:
  using Error::Error;
};

class NotPlanar : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class DegenerateDirection : public ValidationError {
public:
  using ValidationError::ValidationError;
};

// Malformed text input; carries a 1-based line number for diagnostics.
class ParseError : public ValidationError {
public:
  ParseError(const std::string& what, std::size_t line)
      : ValidationError(what + " (line " + std::to_string(line) + ")"), line(line) {}
  std::size_t line;
};

}  // namespace mwa
