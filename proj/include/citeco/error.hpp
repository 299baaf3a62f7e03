#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace citeco {

/// Broad failure class. Maps one-to-one onto CLI exit codes.
enum class ErrorKind {
  Usage = 1,
  Data = 2,
  Numerical = 3,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::Data, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DuplicateRecordError : public ParseError {
 public:
  DuplicateRecordError(std::size_t line, const std::string& citing, const std::string& cited)
      : ParseError(line, "duplicate record " + citing + " -> " + cited) {}
};

class MissingJournalError : public Error {
 public:
  explicit MissingJournalError(const std::string& id)
      : Error(ErrorKind::Data, "unknown journal '" + id + "'"), id_(id) {}

  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class DegenerateError : public Error {
 public:
  explicit DegenerateError(const std::string& what) : Error(ErrorKind::Data, what) {}
};

/// A profile for which a similarity coefficient is undefined (zero variance or zero norm).
class UndefinedSimilarityError : public Error {
 public:
  UndefinedSimilarityError(const std::string& measure, const std::string& id)
      : Error(ErrorKind::Data, measure + " undefined for journal '" + id + "'"), id_(id) {}

  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class IncompleteAssignmentError : public Error {
 public:
  explicit IncompleteAssignmentError(const std::string& id)
      : Error(ErrorKind::Data, "journal '" + id + "' has no factor assignment"), id_(id) {}

  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

}  // namespace citeco
