#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idsdvbs {

enum class ErrorCode {
    InversionOfZero,
    ParamMismatch,
    InvalidPoint,
    ParamSearchFailed,
    HashToPointFailed,
    DecodeError,
    DomainError,
    RefusedTooLarge,
    DuplicateSession,
    Degenerate,
    Io,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures are reported through this type; callers that care
// about the category switch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class DecodeError : public Error {
public:
    DecodeError(std::size_t position, const std::string& what)
        : Error(ErrorCode::DecodeError, what + " (at byte " + std::to_string(position) + ")"),
          position_(position)
    {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace idsdvbs
