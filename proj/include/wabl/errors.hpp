#pragma once

#include <stdexcept>
#include <string>

namespace wabl {

// Base for every error raised by the library. Callers that only care about
// "something went wrong with this fuzzy number" catch this.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Argument outside its mathematical domain (alpha outside [0,1], t = 0,
// negative mass, unordered trapezoid parameters, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

// A level with positive weight has no points in its cut.
class EmptyCutError : public Error {
public:
  EmptyCutError(double alpha, const std::string &what) : Error(what), alpha_(alpha) {}
  double alpha() const noexcept { return alpha_; }

private:
  double alpha_;
};

// Explicit weights whose sum is too far from 1 to be silently renormalized.
class NormalizationError : public Error {
public:
  NormalizationError(double sum, const std::string &what) : Error(what), sum_(sum) {}
  double sum() const noexcept { return sum_; }

private:
  double sum_;
};

// Malformed or inconsistent user input (document syntax, record shape,
// command-line configuration).
class InputError : public Error {
public:
  using Error::Error;
};

} // namespace wabl
