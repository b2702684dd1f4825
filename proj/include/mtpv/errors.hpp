#ifndef MTPV_ERRORS_HPP
#define MTPV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mtpv {

// Shape disagreement between operands (reported with both shapes).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bad argument value (negative ratio, zero dimension, rate >= 1, ...).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed corpus / embedding / config file; message carries the line number.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller broke a call-sequence contract (decode past the end, non-deterministic
// loss handed to the finite-difference oracle, ...).
struct ProtocolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid configuration discovered before any work starts.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Checkpoint file problems; `kind` distinguishes the failure classes.
struct CheckpointError : std::runtime_error {
    enum class Kind { NotACheckpoint, VersionMismatch, Truncated, ShapeMismatch };
    CheckpointError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    Kind kind;
};

} // namespace mtpv

#endif
