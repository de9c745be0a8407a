#pragma once

#include <stdexcept>
#include <string>

namespace grltk {

enum class Errc {
    NotPrime,
    ReducibleModulus,
    UnsupportedSize,
    DivisionByZero,
    FieldMismatch,
    ParseError,
    ShapeMismatch,
    DuplicateEvaluationPoint,
    Singular,
    ZeroCode,
    BudgetExceeded,
    DuplicateElement,
    SpecInvariantViolated,
    KTooSmall,
    WrongMixingSize,
    LengthParity,
    ZeroScale,
    LimitZero,
    InvalidJob,
};

/// All library failures surface as this exception; `code` identifies the
/// violated contract so callers can branch without string matching.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::UnsupportedSize: return "UnsupportedSize";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::ParseError: return "ParseError";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::DuplicateEvaluationPoint: return "DuplicateEvaluationPoint";
        case Errc::Singular: return "Singular";
        case Errc::ZeroCode: return "ZeroCode";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::DuplicateElement: return "DuplicateElement";
        case Errc::SpecInvariantViolated: return "SpecInvariantViolated";
        case Errc::KTooSmall: return "KTooSmall";
        case Errc::WrongMixingSize: return "WrongMixingSize";
        case Errc::LengthParity: return "LengthParity";
        case Errc::ZeroScale: return "ZeroScale";
        case Errc::LimitZero: return "LimitZero";
        case Errc::InvalidJob: return "InvalidJob";
    }
    return "Unknown";
}

}  // namespace grltk
