#include "skewq/errors.hpp"

namespace skewq {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ZeroActor: return "ZeroActor";
        case ErrorKind::Commuting: return "Commuting";
        case ErrorKind::SingularSystem: return "SingularSystem";
        case ErrorKind::BranchCut: return "BranchCut";
        case ErrorKind::TwistMismatch: return "TwistMismatch";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::PoleOrbit: return "PoleOrbit";
        case ErrorKind::ExcludedImagePoint: return "ExcludedImagePoint";
        case ErrorKind::WitnessDisagreement: return "WitnessDisagreement";
        case ErrorKind::NoLimit: return "NoLimit";
        case ErrorKind::StepUnderflow: return "StepUnderflow";
        case ErrorKind::RealPoint: return "RealPoint";
        case ErrorKind::OutsideRegion: return "OutsideRegion";
        case ErrorKind::OutsideAnnulus: return "OutsideAnnulus";
        case ErrorKind::BadWinding: return "BadWinding";
        case ErrorKind::UnknownSuite: return "UnknownSuite";
        case ErrorKind::Schema: return "Schema";
    }
    return "Unknown";
}

MathError MathError::nested(std::string_view segment) const {
    // Paths are built leaf-first while the exception unwinds; "$" marks the root.
    std::string tail = path_.empty() || path_ == "$" ? std::string{} : path_.substr(1);
    return MathError(kind_, what(), "$" + std::string(segment) + tail);
}

}  // namespace skewq
