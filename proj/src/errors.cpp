#include "dslice/errors.hpp"

namespace dslice {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput: return "invalid_input";
        case ErrorCode::JumpPoint: return "jump_point";
        case ErrorCode::PrecisionExhausted: return "precision_exhausted";
        case ErrorCode::Undecidable: return "undecidable";
        case ErrorCode::CapExceeded: return "cap_exceeded";
        case ErrorCode::UndefinedHeight: return "undefined_height";
        case ErrorCode::Unsupported: return "unsupported";
        case ErrorCode::MissingHypothesis: return "missing_hypothesis";
        case ErrorCode::NoCertificate: return "no_certificate";
        case ErrorCode::Internal: return "internal";
    }
    return "unknown";
}

int Error::exit_status() const {
    switch (code_) {
        case ErrorCode::PrecisionExhausted:
        case ErrorCode::Undecidable: return 2;
        case ErrorCode::Internal: return 3;
        default: return 1;
    }
}

}  // namespace dslice
