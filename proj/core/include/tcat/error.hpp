#pragma once

#include <stdexcept>
#include <string>

namespace tcat {

enum class ErrorKind {
  InvalidArgument,  // malformed request (bad label, wrong shape)
  Inconsistent,     // data violates an axiom the theory guarantees
  Numerical,        // iteration failed or two routes disagree beyond tolerance
  OutOfScope,       // request needs machinery this library does not provide
  Parse,            // unreadable or malformed input file
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace tcat
