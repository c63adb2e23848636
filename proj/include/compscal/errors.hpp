#pragma once
#include <stdexcept>
#include <string>

namespace compscal {

// Every failure mode the library can signal. The token form (see to_token)
// is what ends up in report status columns and CLI diagnostics.
enum class ErrorCode {
    DomainError,    // argument outside a function's domain
    Usage,          // malformed request (grid spec, config file, flags)
    NoSolution,     // target outside the image of the map being inverted
    SolverFailure,  // iteration budget exhausted without convergence
    NoVacuum,       // potential has no positive, stable minimum
    Tachyonic,      // negative mass^2: unphysical parameter region
    Inconsistent,   // inputs violate a consistency relation in strict mode
    Misuse,         // operation called outside its intended special case
    RangeError,     // bracketing or grid range too small
    IoError,        // unreadable/unwritable destination
};

const char* to_token(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }
    const char* token() const { return to_token(code_); }

private:
    ErrorCode code_;
};

} // namespace compscal
