#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ekr {

enum class ErrorKind {
  EmptyGraph,
  InvalidParameter,
  UniverseTooLarge,
  InvalidShift,
  NotApplicable,
  InvalidGround,
  UndefinedStatistic,
  Precondition,
  ResourceLimit,
  Parse,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the exact solver when a family exceeds the member cap. Carries a
// valid lower bound on the maximum intersecting subfamily.
class ResourceLimitError : public Error {
 public:
  ResourceLimitError(const std::string& what, std::size_t member_count,
                     std::size_t lower_bound)
      : Error(ErrorKind::ResourceLimit, what),
        member_count_(member_count),
        lower_bound_(lower_bound) {}

  std::size_t member_count() const noexcept { return member_count_; }
  std::size_t lower_bound() const noexcept { return lower_bound_; }

 private:
  std::size_t member_count_;
  std::size_t lower_bound_;
};

}  // namespace ekr
