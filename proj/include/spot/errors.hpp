#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace spot {

/// Contract violation on an operation's inputs (bad token id, empty batch, ...).
class InvalidInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// HTTP / network failure after the client exhausted its retries.
class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A response that arrived but could not be decoded. Carries the raw text so
/// callers can log or inspect what the peer actually sent.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string raw)
      : std::runtime_error(message), raw_(std::move(raw)) {}
  explicit ParseError(const std::string& message) : std::runtime_error(message) {}

  const std::string& raw() const noexcept { return raw_; }

 private:
  std::string raw_;
};

/// Filesystem failure, always with the offending path in the message.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Persisted data that parsed but violates an invariant (stale change_ratio,
/// bad header, answer sets that do not recompute).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generation budget that could not be met (e.g. not enough distinct board
/// states to fill a dataset).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite loss or gradient during training.
class NumericsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or schema-violating run configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spot
