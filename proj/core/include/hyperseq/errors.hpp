#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperseq {

// A request exceeds one of the documented index or enumeration caps.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments are outside the domain where an operation is defined.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unknown identity id or similar registry miss.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An internal invariant that a proven identity guarantees was violated.
// Seeing this means the implementation is wrong, not the input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed textual input. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed lines that violate a file-level rule (e.g. index ordering).
class FormatError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace hyperseq
