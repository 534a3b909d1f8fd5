#pragma once

#include <stdexcept>
#include <string>

namespace dslice {

enum class ErrorCode {
    InvalidInput,
    JumpPoint,
    PrecisionExhausted,
    Undecidable,
    CapExceeded,
    UndefinedHeight,
    Unsupported,
    MissingHypothesis,
    NoCertificate,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

    /// Process exit status for the CLI: 1 precondition, 2 precision, 3 internal.
    int exit_status() const;

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

inline void require(bool ok, ErrorCode code, const std::string& what) {
    if (!ok)
        throw Error(code, what);
}

}  // namespace dslice
