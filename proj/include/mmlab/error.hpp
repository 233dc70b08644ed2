#ifndef MMLAB_ERROR_HPP
#define MMLAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mmlab {

enum class ErrorCode {
  FieldMismatch,
  UnknownElement,
  TooLarge,
  NotStandardForm,
  OverlappingSets,
  LabelCollision,
  GroundMismatch,
  NotBinary,
  NotSubtransversal,
  NotTriple,
  Degenerate,
  IncompleteWeights,
  NotTight,
  NotOrienting,
  NotBinaryTight3,
  NotSymmetric,
  NotInvSymmetric,
  ConstructionMismatch,
  HasLoops,
  NoBasis,
  NotClassUnion,
  InternalInconsistency,
  InvalidArgument,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotStandardForm: return "NotStandardForm";
    case ErrorCode::OverlappingSets: return "OverlappingSets";
    case ErrorCode::LabelCollision: return "LabelCollision";
    case ErrorCode::GroundMismatch: return "GroundMismatch";
    case ErrorCode::NotBinary: return "NotBinary";
    case ErrorCode::NotSubtransversal: return "NotSubtransversal";
    case ErrorCode::NotTriple: return "NotTriple";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::IncompleteWeights: return "IncompleteWeights";
    case ErrorCode::NotTight: return "NotTight";
    case ErrorCode::NotOrienting: return "NotOrienting";
    case ErrorCode::NotBinaryTight3: return "NotBinaryTight3";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotInvSymmetric: return "NotInvSymmetric";
    case ErrorCode::ConstructionMismatch: return "ConstructionMismatch";
    case ErrorCode::HasLoops: return "HasLoops";
    case ErrorCode::NoBasis: return "NoBasis";
    case ErrorCode::NotClassUnion: return "NotClassUnion";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Malformed input (exit 1) versus a well-formed object failing a check (exit 2).
  bool is_input_error() const noexcept {
    return code_ == ErrorCode::ParseError || code_ == ErrorCode::InvalidArgument;
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace mmlab

#endif  // MMLAB_ERROR_HPP
