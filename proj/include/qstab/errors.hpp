#pragma once

#include <stdexcept>
#include <string>

namespace qstab {

enum class Errc {
    MalformedInput,
    CyclicQuiver,
    DuplicateVertex,
    DimensionMismatch,
    DisconnectedQuiver,
    NotTame,
    NonIntegralResult,
    NotARoot,
    NotABaseRoot,
    IndexOutOfRange,
    UnknownClass,
    ZeroDimVector,
    NegativeEntry,
    NotSupportedDim,
    NotRegularCase,
    ResourceLimit,
    InternalInconsistency,
    FieldMismatch,
    GenericityNotFound,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::MalformedInput: return "MalformedInput";
        case Errc::CyclicQuiver: return "CyclicQuiver";
        case Errc::DuplicateVertex: return "DuplicateVertex";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::DisconnectedQuiver: return "DisconnectedQuiver";
        case Errc::NotTame: return "NotTame";
        case Errc::NonIntegralResult: return "NonIntegralResult";
        case Errc::NotARoot: return "NotARoot";
        case Errc::NotABaseRoot: return "NotABaseRoot";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::UnknownClass: return "UnknownClass";
        case Errc::ZeroDimVector: return "ZeroDimVector";
        case Errc::NegativeEntry: return "NegativeEntry";
        case Errc::NotSupportedDim: return "NotSupportedDim";
        case Errc::NotRegularCase: return "NotRegularCase";
        case Errc::ResourceLimit: return "ResourceLimit";
        case Errc::InternalInconsistency: return "InternalInconsistency";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::GenericityNotFound: return "GenericityNotFound";
    }
    return "UnknownError";
}

/// Single exception type for the whole library; `code()` identifies the
/// failure class so callers (and the CLI) can map it to diagnostics.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace qstab
