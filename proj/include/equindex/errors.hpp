#pragma once

#include <stdexcept>
#include <string>

namespace equindex {

/// Base of every error raised by the engine. The CLI maps these to exit
/// status 1; IoError maps to exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Leading coefficient of a series is not a unit of the coefficient ring.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// An operation defined only for genuine bundles received minus roots.
class VirtualBundle : public Error {
 public:
  using Error::Error;
};

class ModelMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedModel : public Error {
 public:
  using Error::Error;
};

/// Malformed problem input. The message starts with the offending JSON path.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Nonpositive weight in a normal decomposition.
class WeightError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace equindex
