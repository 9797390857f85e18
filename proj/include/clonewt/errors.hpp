#pragma once

#include <stdexcept>
#include <string>

namespace clonewt {

// Malformed input, violated precondition, or unknown name.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration grew past its configured cap. `flag` names the CLI option
// that raises it.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::string flag)
      : std::runtime_error(what), flag_(std::move(flag)) {}
  const std::string& flag() const noexcept { return flag_; }

 private:
  std::string flag_;
};

// A numerical procedure did not reach its target within budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace clonewt
