#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewq {

enum class ErrorKind {
    ZeroActor,
    Commuting,
    SingularSystem,
    BranchCut,
    TwistMismatch,
    DomainError,
    PoleOrbit,
    ExcludedImagePoint,
    WitnessDisagreement,
    NoLimit,
    StepUnderflow,
    RealPoint,
    OutsideRegion,
    OutsideAnnulus,
    BadWinding,
    UnknownSuite,
    Schema,
};

std::string_view to_string(ErrorKind kind);

/// Error raised by every numeric operation in the library.
///
/// `path()` names the failing subexpression when the error surfaced while
/// evaluating an expression tree ("$" is the root, e.g. "$.args[1].inner").
class MathError : public std::runtime_error {
public:
    MathError(ErrorKind kind, const std::string& message, std::string path = {})
        : std::runtime_error(message), kind_(kind), path_(std::move(path)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& path() const noexcept { return path_; }

    /// Same error, with `segment` prepended to the path.
    MathError nested(std::string_view segment) const;

private:
    ErrorKind kind_;
    std::string path_;
};

}  // namespace skewq
