#pragma once

#include <stdexcept>
#include <string>

namespace fracfac {

enum class ErrorKind {
  DimensionMismatch,
  SizeLimit,
  Domain,
  Inconsistent,
  ResolutionBelowII,
  ResolutionBelowIII,
  Capacity,
  InvalidGenerator,
  ReducedRank,
  Precondition,
  Scale,
  Budget,
  Parse,
};

/// Single exception type for the library; `kind()` distinguishes the cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace fracfac
