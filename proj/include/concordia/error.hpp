#pragma once

#include <stdexcept>
#include <string>

namespace concordia {

// Failure taxonomy shared across the library.  Every throwing operation
// uses one of these kinds so callers (and the CLI exit-code mapping) can
// dispatch without string matching.
enum class ErrorKind {
    Parse,
    NotSeifert,
    NotSymmetric,
    NotInImage,
    SingularBaseChange,
    SingularForm,
    DimensionMismatch,
    SingularAtSample,
    SingularAtRoot,
    PrecisionExhausted,
    NotPrimePower,
    OracleMismatch,
    NotInvertibleModP,
    NotElementaryAbelian,
    TooLarge,
    OddRank,
    SingularIntermediate,
    InvalidBlock,
    EquivarianceViolated,
    ChainMismatch,
    BadFamily,
    PreconditionFailed,
    IdentityFailure,
    Internal,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::NotSeifert: return "NotSeifert";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::NotInImage: return "NotInImage";
        case ErrorKind::SingularBaseChange: return "SingularBaseChange";
        case ErrorKind::SingularForm: return "SingularForm";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::SingularAtSample: return "SingularAtSample";
        case ErrorKind::SingularAtRoot: return "SingularAtRoot";
        case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorKind::NotPrimePower: return "NotPrimePower";
        case ErrorKind::OracleMismatch: return "OracleMismatch";
        case ErrorKind::NotInvertibleModP: return "NotInvertibleModP";
        case ErrorKind::NotElementaryAbelian: return "NotElementaryAbelian";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::OddRank: return "OddRank";
        case ErrorKind::SingularIntermediate: return "SingularIntermediate";
        case ErrorKind::InvalidBlock: return "InvalidBlock";
        case ErrorKind::EquivarianceViolated: return "EquivarianceViolated";
        case ErrorKind::ChainMismatch: return "ChainMismatch";
        case ErrorKind::BadFamily: return "BadFamily";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::IdentityFailure: return "IdentityFailure";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace concordia
