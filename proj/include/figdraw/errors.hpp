#pragma once

#include <stdexcept>
#include <string>

namespace figdraw {

/// Base of every error the library raises. Each subclass names one failure
/// category; the CLI maps all of them to exit status 1.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Argument outside its documented range (bad height, month, factor...).
class RangeError : public Error {
public:
  using Error::Error;
};

/// Picture dimensions that cannot be combined, or an empty clip.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// A word too long for the requested column width.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// A character with no cell or glyph representation.
class UnsupportedCharError : public Error {
public:
  using Error::Error;
};

/// NaN or infinity where a finite number is required.
class NumericError : public Error {
public:
  using Error::Error;
};

/// Work too large to enumerate (e.g. 4^n segments past the depth cap).
class CapacityError : public Error {
public:
  using Error::Error;
};

/// A moving circle that can never fit inside its container.
class PlacementError : public Error {
public:
  using Error::Error;
};

/// A benchmarked algorithm produced a wrong answer.
class CorrectnessError : public Error {
public:
  using Error::Error;
};

} // namespace figdraw
