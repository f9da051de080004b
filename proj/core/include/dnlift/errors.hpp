#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dnlift {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in program, query, term or certificate text. Line and column
/// are 1-based; both are 0 when the position is unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  /// The message without the location prefix.
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
  std::size_t line_;
  std::size_t column_;
};

/// A relation symbol was used with two different arities.
class ArityClash : public Error {
 public:
  ArityClash(const std::string& predicate, std::size_t first, std::size_t second);

  const std::string& predicate() const { return predicate_; }

 private:
  std::string predicate_;
};

/// A filter handed to the loop detector could not be certified as
/// derivation neutral for the program.
class FilterNotDN : public Error {
 public:
  using Error::Error;
};

/// Derivation enumeration exceeded its node budget.
class ResourceLimit : public Error {
 public:
  explicit ResourceLimit(std::size_t budget);

  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

}  // namespace dnlift
