#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shexd {

// Base for every error the library raises. Validation *verdicts* are not
// errors; they come back as ValidationResult values.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnknownPrefix : public SyntaxError {
 public:
  UnknownPrefix(const std::string& prefix, std::size_t line, std::size_t column)
      : SyntaxError("unknown prefix '" + prefix + ":'", line, column), prefix_(prefix) {}
  const std::string& prefix() const { return prefix_; }

 private:
  std::string prefix_;
};

class UnknownNode : public Error {
 public:
  explicit UnknownNode(const std::string& key) : Error("unknown node " + key) {}
};

class DuplicateShapeLabel : public Error {
 public:
  explicit DuplicateShapeLabel(const std::string& label)
      : Error("duplicate shape label <" + label + ">") {}
};

class UndefinedShapeReference : public Error {
 public:
  explicit UndefinedShapeReference(const std::string& label)
      : Error("reference to undefined shape <" + label + ">") {}
};

class SchemaJsonError : public Error {
 public:
  SchemaJsonError(const std::string& path, const std::string& message)
      : Error(path + ": " + message), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class NotWellDefined : public Error {
 public:
  using Error::Error;
};

class NotSingleOccurrence : public Error {
 public:
  using Error::Error;
};

// Resource bounds. These are never verdicts.
class BagTooLarge : public Error {
 public:
  BagTooLarge(std::size_t size, std::size_t bound)
      : Error("bag of " + std::to_string(size) + " edges exceeds brute-force bound " +
              std::to_string(bound)) {}
};

class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace shexd
