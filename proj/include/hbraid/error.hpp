#pragma once

#include <stdexcept>
#include <string>

namespace hbraid {

// Base for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Words from incompatible (n, g) alphabets were combined.
class ContextError : public Error {
 public:
  using Error::Error;
};

// A generator index lies outside the bounds of its alphabet.
class IndexError : public Error {
 public:
  using Error::Error;
};

// An oracle received letters it cannot interpret (e.g. abstract atoms under psi).
class UnsupportedAlphabet : public Error {
 public:
  using Error::Error;
};

// A step or size cap was exceeded. Caps are diagnostics, not semantics.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class IncompleteData : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hbraid
