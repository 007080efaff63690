#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcalc {

// Raised when an operation is applied outside the set where it is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Syntax errors in the expression language; offset is a byte position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class NoClosedForm : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonOrientable : public DomainError {
 public:
  using DomainError::DomainError;
};

// A 1-form that is not d of a scalar function. The witness is a closed
// vertex walk w0, w1, ..., w0 along which the circulation is nonzero.
class NotGradientField : public DomainError {
 public:
  NotGradientField(const std::string& what, std::vector<int> cycle)
      : DomainError(what), cycle_(std::move(cycle)) {}

  const std::vector<int>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<int> cycle_;
};

// Input has a component in the kernel of an operator that must be inverted.
class HarmonicComponent : public DomainError {
 public:
  HarmonicComponent(const std::string& what, double norm)
      : DomainError(what + " (harmonic norm " + std::to_string(norm) + ")"), norm_(norm) {}

  double norm() const noexcept { return norm_; }

 private:
  double norm_;
};

}  // namespace dcalc
