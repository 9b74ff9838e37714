#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sps {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured size or budget limit would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// The power-sum oracle refused to decide an instance.
class OracleIncomplete : public Error {
 public:
  using Error::Error;
};

/// An expression failed validation; carries every violation found.
class InvalidExpression : public Error {
 public:
  explicit InvalidExpression(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "invalid expression";
    for (const auto& s : v) {
      out += "; ";
      out += s;
    }
    return out;
  }

  std::vector<std::string> violations_;
};

/// Malformed input document. `path()` is a JSON pointer to the offending value.
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& what)
      : Error((path.empty() ? std::string("/") : path) + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace sps
