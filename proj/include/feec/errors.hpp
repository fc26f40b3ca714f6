#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace feec {

// Precondition or domain violations (bad degrees, mismatched dimensions,
// inputs outside the space an operation is defined on).  CLI exit code 2.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Input coefficients are not all of one homogeneity degree.
class NotHomogeneous : public DomainError {
 public:
  explicit NotHomogeneous(const std::string& what) : DomainError(what) {}
};

// Coefficient degree exceeds the requested homogenization degree.
class DegreeTooHigh : public DomainError {
 public:
  explicit DegreeTooHigh(const std::string& what) : DomainError(what) {}
};

// An extension that must land in a polynomial space produced an s-denominator,
// i.e. the input was not in the claimed trial space.
class NotPolynomialResult : public DomainError {
 public:
  explicit NotPolynomialResult(const std::string& what) : DomainError(what) {}
};

// Inverting the modified star requires exact division by the coordinate
// product; forms outside its range (trace not vanishing) are rejected.
class NotInRange : public DomainError {
 public:
  explicit NotInRange(const std::string& what) : DomainError(what) {}
};

// Syntax error from the expression parser.  CLI exit code 1.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace feec
