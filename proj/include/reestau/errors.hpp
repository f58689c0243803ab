// Exception hierarchy shared by every module.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reestau {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed polynomial text or algebra file. `position` is a 0-based
// character offset into the parsed text (or a line number for files).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Operands that live in different rings or fields.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace reestau
