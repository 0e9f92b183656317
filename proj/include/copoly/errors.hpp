#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace copoly {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two truncated series of different order met in one operation.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

/// A series operation was given a constant term it cannot accept.
class ConstantTermError : public Error {
 public:
  using Error::Error;
};

/// The moment recurrence degenerates: d + k*a vanished at index k.
class AdmissibilityViolation : public Error {
 public:
  explicit AdmissibilityViolation(std::int64_t k)
      : Error("admissibility violated: psi' + k*phi''/2 = 0 at k = " + std::to_string(k)),
        k_(k) {}
  std::int64_t k() const noexcept { return k_; }

 private:
  std::int64_t k_;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class NotProportional : public Error {
 public:
  using Error::Error;
};

class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

class UnknownEquation : public Error {
 public:
  using Error::Error;
};

/// A finite moment table was asked for an index it does not hold.
class MomentsExhausted : public Error {
 public:
  explicit MomentsExhausted(std::size_t k)
      : Error("moment index " + std::to_string(k) + " beyond the explicit moment table") {}
};

class NotQuasiDefinite : public Error {
 public:
  explicit NotQuasiDefinite(std::size_t level)
      : Error("Hankel determinant vanishes at level " + std::to_string(level)), level_(level) {}
  std::size_t level() const noexcept { return level_; }

 private:
  std::size_t level_;
};

class MismatchError : public Error {
 public:
  MismatchError(std::size_t degree, const std::string& what)
      : Error("mismatch at degree " + std::to_string(degree) + ": " + what), degree_(degree) {}
  std::size_t degree() const noexcept { return degree_; }

 private:
  std::size_t degree_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownIdentifier : public Error {
 public:
  UnknownIdentifier(std::size_t position, const std::string& name)
      : Error("unknown identifier '" + name + "' at position " + std::to_string(position)),
        name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace copoly
