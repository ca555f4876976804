#pragma once

#include <stdexcept>
#include <string>

namespace catalan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A letter outside the permitted alphabet.
class InvalidAlphabet : public Error {
 public:
  using Error::Error;
};

/// An index (face, degeneracy, object, ...) out of its valid range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Face requested on a 0-simplex.
class NoFaceError : public Error {
 public:
  using Error::Error;
};

/// Non-degenerate input required but a degenerate simplex was supplied.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// A relation failing the K_n conditions.
class KConditionError : public Error {
 public:
  using Error::Error;
};

/// Facets of a boundary disagree on a shared face.
class BoundaryCompatibilityError : public Error {
 public:
  using Error::Error;
};

/// Malformed tables: dangling references, wrong sources/targets, ...
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation's documented precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A search or construction would exceed its size cap.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Input document does not match the expected schema.
class SchemaError : public Error {
 public:
  SchemaError(std::string field, const std::string& what)
      : Error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace catalan
