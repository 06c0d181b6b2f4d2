#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace abc {

// Base of every domain error raised by the library. The CLI maps these to
// exit code 1; anything else is a usage or internal error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A composite cofactor could not be split within the configured FactorBudget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string cofactor, const std::string& why)
      : Error("factor budget exceeded on " + cofactor + ": " + why), cofactor_(std::move(cofactor)) {}
  const std::string& cofactor() const noexcept { return cofactor_; }

 private:
  std::string cofactor_;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

class NotCoprime : public Error {
 public:
  using Error::Error;
};

class OrderDoesNotDivide : public Error {
 public:
  using Error::Error;
};

class InvalidTriple : public Error {
 public:
  using Error::Error;
};

class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

class NotAbcInput : public Error {
 public:
  using Error::Error;
};

class EvenExponent : public Error {
 public:
  using Error::Error;
};

class NotAbc : public Error {
 public:
  using Error::Error;
};

class SegmentTooLarge : public Error {
 public:
  using Error::Error;
};

class EmptyDenominator : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class VerificationFailed : public Error {
 public:
  explicit VerificationFailed(std::vector<std::size_t> lines)
      : Error(describe(lines)), lines_(std::move(lines)) {}
  const std::vector<std::size_t>& lines() const noexcept { return lines_; }

 private:
  static std::string describe(const std::vector<std::size_t>& lines) {
    std::string s = "not abc triples on line(s):";
    for (std::size_t i = 0; i < lines.size() && i < 20; ++i) s += " " + std::to_string(lines[i]);
    if (lines.size() > 20) s += " ... (" + std::to_string(lines.size()) + " total)";
    return s;
  }
  std::vector<std::size_t> lines_;
};

}  // namespace abc
