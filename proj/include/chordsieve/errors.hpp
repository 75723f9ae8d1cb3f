#pragma once

#include <stdexcept>
#include <string>

namespace chordsieve {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (graph files, JSON documents, numbers).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition was violated: non-chordal graph where a
// chordal one is required, weights not summing to one, bad indices...
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input exceeds a hard enumeration cap (product-space coordinates,
// Held-Karp size, exhaustive tree search size).
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace chordsieve
