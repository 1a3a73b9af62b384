#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mzv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input; `position` is a 0-based offset into the original text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An argument lies outside the subring or encoding the operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotPrimeError : public Error {
 public:
  using Error::Error;
};

class CacheOverflow : public Error {
 public:
  using Error::Error;
};

}  // namespace mzv
