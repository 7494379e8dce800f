#pragma once

#include <stdexcept>
#include <string>

namespace grenoble {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: unknown vertex ids, adjacent pairs where a
/// non-adjacent pair is required, bad generator parameters.
class InputError : public Error {
public:
  using Error::Error;
};

/// An enumeration budget or a size cap was exceeded. Never silently
/// truncated.
class ResourceError : public Error {
public:
  using Error::Error;
};

/// A structural assertion failed. On a square-free Grenoble graph this
/// indicates a bug; otherwise the input was outside the class.
class LemmaViolation : public Error {
public:
  LemmaViolation(std::string lemma, std::string detail)
      : Error(lemma + ": " + detail), lemma_(std::move(lemma)) {}

  const std::string& lemma() const { return lemma_; }

private:
  std::string lemma_;
};

class ParseError : public Error {
public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

} // namespace grenoble
