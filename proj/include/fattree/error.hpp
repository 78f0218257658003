#pragma once

#include <stdexcept>
#include <string>

namespace fattree {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input document does not match its schema. `field()` is a JSON-path-like location.
class ValidationError : public Error {
public:
  ValidationError(std::string field, const std::string& what)
      : Error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

private:
  std::string field_;
};

/// Two catalog entries share an id.
class ConflictError : public Error {
public:
  using Error::Error;
};

/// The requested node count cannot be reached with the available switch radix.
class RadixError : public Error {
public:
  using Error::Error;
};

/// No arrangement satisfies the request (placement, expansion).
class InfeasibleError : public Error {
public:
  using Error::Error;
};

} // namespace fattree
