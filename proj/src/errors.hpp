#pragma once

#include <stdexcept>
#include <string>

namespace chemoflow {

enum class ErrorCode {
    InvalidArgument,
    GridMismatch,
    Precondition,
    Config,
    Io,
    Diverged,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond)
        throw Error(code, what);
}

}  // namespace chemoflow
