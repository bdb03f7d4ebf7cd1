#pragma once

#include <stdexcept>
#include <string>

namespace uctk {

// Kernel failure carrying a stable code such as "ClosureViolation".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace uctk
