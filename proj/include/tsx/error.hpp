#pragma once

#include <stdexcept>
#include <string>

namespace tsx {

enum class ErrorCode {
    InvalidArgument,
    Validation,
    NotFound,
    Io,
    Parse,
};

/// Library-wide exception. The C API maps `code()` onto `tsx_status`.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace tsx
