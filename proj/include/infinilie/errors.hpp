#pragma once

#include <stdexcept>
#include <string>

namespace infinilie {

// Root of every error the library throws. The CLI maps subclasses onto exit
// codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IncompatibleExtension : public Error {
 public:
  explicit IncompatibleExtension(const std::string& what)
      : Error("incompatible extension: " + what) {}
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& what = "division by zero")
      : Error(what) {}
};

class NotOrdered : public Error {
 public:
  NotOrdered() : Error("not ordered: value has a nonzero imaginary part") {}
};

class ExtensionRequired : public Error {
 public:
  explicit ExtensionRequired(const std::string& radicand)
      : Error("extension required: " + radicand) {}
};

// Raised whenever truncated arithmetic cannot certify a result: exponent
// denominators beyond the ramification bound, exhausted Newton headroom,
// determinants whose valuation is too close to the truncation.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Bad configuration files or option values; the CLI exits with status 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace infinilie
