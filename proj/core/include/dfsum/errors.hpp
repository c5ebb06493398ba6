#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dfsum {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument or violated precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input lies outside what the implementation can handle (degree caps,
// splitting fields that were not supplied, search-space limits).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

class FieldDoesNotSplit : public CapabilityError {
 public:
  using CapabilityError::CapabilityError;
};

class NotDiagonalizable : public CapabilityError {
 public:
  using CapabilityError::CapabilityError;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace dfsum
