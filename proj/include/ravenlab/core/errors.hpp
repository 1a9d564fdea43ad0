#pragma once

#include <stdexcept>
#include <string>

namespace ravenlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown symbols, bad patterns, mismatched lengths.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A numeric parameter outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Normalization hit a (possibly) zero denominator.
class NormalizationUndefined : public Error {
 public:
  NormalizationUndefined(const std::string& prefix, const std::string& why)
      : Error("normalization undefined below prefix \"" + prefix + "\": " + why), prefix_(prefix) {}
  const std::string& prefix() const { return prefix_; }

 private:
  std::string prefix_;
};

/// Conditioning on an event whose mass may be zero.
class ConditioningUndefined : public Error {
 public:
  using Error::Error;
};

}  // namespace ravenlab
