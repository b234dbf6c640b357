#pragma once

#include <stdexcept>
#include <string>

namespace trope {

// Bad input, bad config, missing files. CLI maps this to exit code 1.
class UserError : public std::runtime_error {
 public:
  explicit UserError(const std::string& msg) : std::runtime_error(msg) {}
};

// Broken invariants and bugs. CLI maps this to exit code 2.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

class ValidationError : public UserError {
 public:
  explicit ValidationError(const std::string& msg) : UserError(msg) {}
};

}  // namespace trope
