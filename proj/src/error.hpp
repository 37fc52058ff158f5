#pragma once

#include <stdexcept>
#include <string>

namespace hyptri {

/// Failure categories surfaced by the kernel. The C API maps these 1:1 onto
/// its status codes, so the enumeration order is part of the ABI contract.
enum class ErrorCode {
    kInvalidArgument,        // parameter outside its documented domain
    kDegenerateInput,        // operation undefined for this input (e.g. inverting the origin)
    kPointOutsideDisc,       // coordinates at or beyond the absolute
    kPointNotOnGeodesic,
    kPointNotOnChord,
    kChordMissesDisc,        // requested chord angle too steep to meet the disc
    kCollinearPoints,
    kNoCompactCircumcircle,  // circumscribed curve is a horocycle/equidistant
    kDegenerateTriangle,
    kDomain,                 // transcendental argument outside its domain
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace hyptri
