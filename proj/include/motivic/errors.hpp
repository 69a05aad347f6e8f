#pragma once

#include <stdexcept>
#include <string>

namespace motivic {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Errors that encode a mathematical conclusion (a relation fails, a
/// computation is refused for structural reasons) rather than bad input.
class ObstructionError : public Error {
 public:
  using Error::Error;
};

class AlignmentError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NonInvertibleError : public ObstructionError {
 public:
  using ObstructionError::ObstructionError;
};

class UnsupportedError : public ObstructionError {
 public:
  using ObstructionError::ObstructionError;
};

class MalformedPoincareError : public Error {
 public:
  using Error::Error;
};

class ScaleGuardError : public Error {
 public:
  using Error::Error;
};

class MissingMeasureError : public Error {
 public:
  MissingMeasureError(std::string generator, const std::string& what)
      : Error(what), generator_(std::move(generator)) {}
  const std::string& generator() const { return generator_; }

 private:
  std::string generator_;
};

/// Raised by exact division when some monomial is not divisible; carries
/// the offending monomial in canonical text form.
class DivisibilityError : public ObstructionError {
 public:
  DivisibilityError(std::string monomial, const std::string& what)
      : ObstructionError(what), monomial_(std::move(monomial)) {}
  const std::string& monomial() const { return monomial_; }

 private:
  std::string monomial_;
};

}  // namespace motivic
