#pragma once

#include <stdexcept>
#include <string>

namespace qfs {

// Input file absent or unreadable.
class MissingFileError : public std::runtime_error {
 public:
  explicit MissingFileError(const std::string& what) : std::runtime_error(what) {}
};

// A record violates a declared wire schema. `where` names the offending
// record (id or line number) so callers can report it.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& what, std::string where)
      : std::runtime_error(where.empty() ? what : what + " [record " + where + "]"),
        where_(std::move(where)) {}
  explicit SchemaError(const std::string& what) : SchemaError(what, "") {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// Mutually inconsistent or unknown configuration.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Valid input that fails an operation's precondition (e.g. empty reference
// list, insufficient sample for percentiles).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qfs
