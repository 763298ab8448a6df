#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace prodrep {

// Errors carry a short machine-readable code next to the human message.
// The CLI maps DomainError to exit 1 and SchemaError to exit 2.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Input is well formed but violates a mathematical precondition or fails a
// classification (not a filter, not a representation, reducible input, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input cannot be parsed or does not match the documented JSON schemas.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& what) : Error("schema", what) {}
};

namespace errc {
inline constexpr const char* invalid_input = "invalid_input";
inline constexpr const char* not_a_filter = "not_a_filter";
inline constexpr const char* not_a_representation = "not_a_representation";
inline constexpr const char* precondition = "precondition";
inline constexpr const char* internal_consistency = "internal_consistency";
inline constexpr const char* decomposition_failure = "decomposition_failure";
inline constexpr const char* singular_matrix = "singular_matrix";
}  // namespace errc

}  // namespace prodrep
