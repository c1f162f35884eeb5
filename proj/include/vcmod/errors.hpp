#pragma once

#include <stdexcept>
#include <string>

namespace vcmod {

// Base for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violations: bad sizes, out-of-range parameters, mismatched domains.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed class/set/config documents.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An exact search or enumeration would exceed its configured budget.
class WorkLimitExceeded : public Error {
 public:
  using Error::Error;
};

// No concept of the class agrees with the labelled sample.
class NoConsistentHypothesis : public Error {
 public:
  using Error::Error;
};

// Carvers realise the same trace for J and J \ {i}; the witness for i is empty.
class EmptyWitness : public Error {
 public:
  explicit EmptyWitness(std::size_t index)
      : Error("empty witness cluster at index " + std::to_string(index)), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace vcmod
