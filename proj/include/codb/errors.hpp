#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace codb {

/// Base of every error the kernel throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Boundary scopes of two thinnings/covers do not line up. Always a caller bug.
class ScopeMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotSingleton : public Error {
 public:
  using Error::Error;
};

class FlagMismatch : public Error {
 public:
  using Error::Error;
};

/// A term does not inhabit the description it was checked against.
class ShapeError : public Error {
 public:
  ShapeError(std::string path, const std::string& message)
      : Error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Raised when a substitution's partition marks a variable both passive and active.
class Unreachable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at " + std::to_string(position) + ": " + message), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnboundName : public Error {
 public:
  explicit UnboundName(std::string name)
      : Error("unbound name: " + name), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace codb
