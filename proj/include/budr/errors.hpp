#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace budr {

/// Grammar errors carry the offset of the first offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, std::size_t pos)
      : std::runtime_error(std::move(msg)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class NonLocalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfiniteWithinCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotComposableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Carries the first offending sub-run of the rejected word.
class InvalidStringError : public std::runtime_error {
 public:
  InvalidStringError(std::string msg, std::string run)
      : std::runtime_error(std::move(msg)), run_(std::move(run)) {}
  const std::string& offending_run() const { return run_; }

 private:
  std::string run_;
};

class MismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BadVertexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroLambdaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BadFamilyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSmallExtensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StableEndTooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search exhausted its budget without producing a witness or a
/// certificate.  Never silently coerced to a yes/no answer.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RelationViolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace budr
