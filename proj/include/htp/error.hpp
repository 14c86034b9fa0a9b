#pragma once

#include <stdexcept>
#include <string>

namespace htp {

enum class ErrorCode {
  InvalidArgument,
  InvalidColoring,
  Parse,
  Io,
  GuardExceeded,
  Defect,
};

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& detail, const std::string& source = {})
      : Error(ErrorCode::Parse,
              (source.empty() ? "" : source + ": ") + "line " + std::to_string(line) + ": " + detail),
        line_(line),
        detail_(detail) {}
  int line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  int line_;
  std::string detail_;
};

/// A size guard (vertex count, edge count) was exceeded.
class GuardError : public Error {
 public:
  explicit GuardError(const std::string& what) : Error(ErrorCode::GuardExceeded, what) {}
};

/// An internal guarantee did not hold. Carries the offending instance so it
/// can be replayed from the command line.
class DefectError : public Error {
 public:
  DefectError(const std::string& what, std::string instance)
      : Error(ErrorCode::Defect, what), instance_(std::move(instance)) {}
  const std::string& instance() const noexcept { return instance_; }

 private:
  std::string instance_;
};

}  // namespace htp
