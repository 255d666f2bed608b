#pragma once

#include <stdexcept>
#include <string>

namespace overpart {

// Failure categories shared by the C++ core and the C API status codes.
enum class ErrorKind {
  InvalidArgument,
  NotInvertible,
  BudgetExceeded,
  RouteMismatch,
  UnknownCheck,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace overpart
