#pragma once

#include <stdexcept>
#include <string>

namespace rforge {

/// Machine-readable failure codes. Each code belongs to one category,
/// which the CLI maps onto its exit codes.
enum class ErrorCode {
  // retrieval
  PlatformUnavailable,
  RateLimited,
  MissingSource,
  // model access
  MissingRecording,
  ProviderError,
  BudgetExceeded,
  EmbedderUnavailable,
  // input contracts
  UnparseableOutput,
  MissingExplanations,
  ExemplarCountMismatch,
  PromptTooLarge,
  NoRationaleInput,
  IdMismatch,
  ZeroBase,
  OutOfRange,
  LengthMismatch,
  OutOfScale,
  InsufficientData,
  InsufficientCandidates,
  InvalidArgument,
  // persistence
  SchemaViolation,
  IoError,
};

enum class ErrorCategory { Retrieval, Model, InputContract, Schema };

inline ErrorCategory error_category(ErrorCode code) {
  switch (code) {
    case ErrorCode::PlatformUnavailable:
    case ErrorCode::RateLimited:
    case ErrorCode::MissingSource:
      return ErrorCategory::Retrieval;
    case ErrorCode::MissingRecording:
    case ErrorCode::ProviderError:
    case ErrorCode::BudgetExceeded:
    case ErrorCode::EmbedderUnavailable:
      return ErrorCategory::Model;
    case ErrorCode::SchemaViolation:
    case ErrorCode::IoError:
      return ErrorCategory::Schema;
    default:
      return ErrorCategory::InputContract;
  }
}

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::PlatformUnavailable: return "PlatformUnavailable";
    case ErrorCode::RateLimited: return "RateLimited";
    case ErrorCode::MissingSource: return "MissingSource";
    case ErrorCode::MissingRecording: return "MissingRecording";
    case ErrorCode::ProviderError: return "ProviderError";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::EmbedderUnavailable: return "EmbedderUnavailable";
    case ErrorCode::UnparseableOutput: return "UnparseableOutput";
    case ErrorCode::MissingExplanations: return "MissingExplanations";
    case ErrorCode::ExemplarCountMismatch: return "ExemplarCountMismatch";
    case ErrorCode::PromptTooLarge: return "PromptTooLarge";
    case ErrorCode::NoRationaleInput: return "NoRationaleInput";
    case ErrorCode::IdMismatch: return "IdMismatch";
    case ErrorCode::ZeroBase: return "ZeroBase";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::OutOfScale: return "OutOfScale";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::InsufficientCandidates: return "InsufficientCandidates";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }
  ErrorCategory category() const { return error_category(code_); }

 private:
  ErrorCode code_;
};

}  // namespace rforge
