#ifndef VBRAID_ERRORS_HPP
#define VBRAID_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace vbraid {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;

  /// Class name, for diagnostics.
  virtual const char* kind() const noexcept { return "Error"; }
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
  const char* kind() const noexcept override { return "DivisionByZero"; }
};

/// A denominator vanished while evaluating a birational map or mutation.
///
/// When raised from word evaluation, `letter()` is the 1-based position of the
/// offending letter in the word as written (leftmost letter = 1).
class SingularPoint : public Error {
 public:
  explicit SingularPoint(const std::string& what, std::optional<std::size_t> letter = std::nullopt);

  std::optional<std::size_t> letter() const { return letter_; }

  const char* kind() const noexcept override { return "SingularPoint"; }

 private:
  std::optional<std::size_t> letter_;
};

class SyntaxError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "SyntaxError"; }
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "IndexOutOfRange"; }
};

/// Generator or value kind not allowed in this context (e.g. a virtual
/// generator in B_n, or mixed scalar/function arithmetic).
class KindMismatch : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "KindMismatch"; }
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "ArityMismatch"; }
};

class InvalidStrandCount : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "InvalidStrandCount"; }
};

class InvalidExchangeMatrix : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "InvalidExchangeMatrix"; }
};

class LengthLimitExceeded : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "LengthLimitExceeded"; }
};

class StrandLimitExceeded : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "StrandLimitExceeded"; }
};

}  // namespace vbraid

#endif  // VBRAID_ERRORS_HPP
