#pragma once

#include <stdexcept>
#include <string>

namespace circlecolor {

// Base for every error raised by the library. The CLI maps these to exit code 2
// unless they are verification failures.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DuplicateEndpoint : public Error {
public:
  using Error::Error;
};

class DegenerateInterval : public Error {
public:
  using Error::Error;
};

class InvalidPosition : public Error {
public:
  using Error::Error;
};

class IllegalPair : public Error {
public:
  using Error::Error;
};

class IllegalWindow : public Error {
public:
  using Error::Error;
};

class PaletteTooSmall : public Error {
public:
  using Error::Error;
};

class PaletteExhausted : public Error {
public:
  using Error::Error;
};

class BudgetViolated : public Error {
public:
  using Error::Error;
};

class IntervalMissesPillar : public Error {
public:
  using Error::Error;
};

class IncompleteAssignment : public Error {
public:
  using Error::Error;
};

class TooLarge : public Error {
public:
  using Error::Error;
};

class InvariantViolated : public Error {
public:
  using Error::Error;
};

class FormatError : public Error {
public:
  using Error::Error;
};

} // namespace circlecolor
