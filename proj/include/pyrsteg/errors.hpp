#pragma once

#include <stdexcept>
#include <string>

namespace pyrsteg {

enum class Errc {
    // wav container
    TooShort,
    NotRiff,
    NoDataChunk,
    UnsupportedFormat,
    // embedding / extraction
    CapacityExceeded,
    BadMagic,
    Truncated,
    // range tables
    InvalidTable,
    // metrics
    LengthMismatch,
    EmptySignal,
    ZeroMse,
    FrameTooShort,
    ZeroCover,
    // filesystem
    IoFailure,
};

inline const char* errc_name(Errc code) {
    switch (code) {
        case Errc::TooShort: return "TooShort";
        case Errc::NotRiff: return "NotRiff";
        case Errc::NoDataChunk: return "NoDataChunk";
        case Errc::UnsupportedFormat: return "UnsupportedFormat";
        case Errc::CapacityExceeded: return "CapacityExceeded";
        case Errc::BadMagic: return "BadMagic";
        case Errc::Truncated: return "Truncated";
        case Errc::InvalidTable: return "InvalidTable";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::EmptySignal: return "EmptySignal";
        case Errc::ZeroMse: return "ZeroMse";
        case Errc::FrameTooShort: return "FrameTooShort";
        case Errc::ZeroCover: return "ZeroCover";
        case Errc::IoFailure: return "IoFailure";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace pyrsteg
