#pragma once

#include <stdexcept>
#include <string>

namespace bispec {

enum class ErrorKind {
  Domain,          // mathematical precondition violated (division by zero, bad order, ...)
  Parse,           // malformed expression or number
  UnknownId,       // catalog id / parameter not known
  NotEigenfunction,
  Internal,        // self-check failed; indicates a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bispec
