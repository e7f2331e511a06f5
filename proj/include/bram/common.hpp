#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace bram {

inline constexpr const char* kToolVersion = "bram 0.1.0";

/// Raised when serialized input does not conform to a schema.
/// The message names the offending field.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a search exceeds its configured budget. The message names
/// the flag that controls the budget.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a report or certificate is inconsistent with the data it
/// claims to describe (tampering, mismatched inputs).
class IntegrityError : public std::runtime_error {
 public:
  explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kNoLimit = std::numeric_limits<std::uint64_t>::max();

}  // namespace bram
