#pragma once

#include <stdexcept>
#include <string>

namespace skewcliff {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual or file input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A query needs a degree the truncated rewriting system does not certify.
class DegreeBoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace skewcliff
