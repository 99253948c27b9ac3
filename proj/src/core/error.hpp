#pragma once

#include <stdexcept>
#include <string>

namespace wanattr {

// User-facing failures (bad input, bad config) carry code 2; internal or
// numeric failures carry code 1. The CLI maps the code to its exit status.
class Error : public std::runtime_error {
 public:
  Error(int code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

inline Error user_error(std::string msg) { return Error(2, std::move(msg)); }
inline Error internal_error(std::string msg) { return Error(1, std::move(msg)); }

}  // namespace wanattr
