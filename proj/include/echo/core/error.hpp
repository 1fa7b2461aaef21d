// Copyright 2026 The ECHO Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ECHO_CORE_ERROR_HPP_
#define ECHO_CORE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace echo {

enum class ErrorCode {
  // config / CLI
  SchemaViolation,
  ConfigInvalid,
  ConfigHashMismatch,
  UnknownBackbone,
  EmbeddingDimMismatch,
  // data
  MissingColumn,
  UnknownLabel,
  EmptyManifest,
  DecodeFailure,
  UnsupportedEncoding,
  CorruptCheckpoint,
  PretrainedWeightsUnavailable,
  ShapeMismatch,
  LengthMismatch,
  MissingFold,
  DuplicateFold,
  IncomparableReports,
  IoError,
  // training / numerics
  EmptySplit,
  NonFiniteLoss,
  NonFiniteGradient,
  PerplexityInfeasible,
  // ontology
  InvalidParentCount,
  UnparseableReply,
  ProviderUnreachable,
  OntologyGenerationFailed,
  ClassCountTooSmall,
  OntologyMismatch,
  UnassignedLabel,
};

// Process exit categories used by the CLI.
enum class ErrorCategory { Config = 2, Data = 3, Training = 4, Ontology = 5 };

inline ErrorCategory category_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::SchemaViolation:
    case ErrorCode::ConfigInvalid:
    case ErrorCode::ConfigHashMismatch:
    case ErrorCode::UnknownBackbone:
    case ErrorCode::EmbeddingDimMismatch:
      return ErrorCategory::Config;
    case ErrorCode::EmptySplit:
    case ErrorCode::NonFiniteLoss:
    case ErrorCode::NonFiniteGradient:
    case ErrorCode::PerplexityInfeasible:
      return ErrorCategory::Training;
    case ErrorCode::InvalidParentCount:
    case ErrorCode::UnparseableReply:
    case ErrorCode::ProviderUnreachable:
    case ErrorCode::OntologyGenerationFailed:
    case ErrorCode::ClassCountTooSmall:
    case ErrorCode::OntologyMismatch:
    case ErrorCode::UnassignedLabel:
      return ErrorCategory::Ontology;
    default:
      return ErrorCategory::Data;
  }
}

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::ConfigHashMismatch: return "ConfigHashMismatch";
    case ErrorCode::UnknownBackbone: return "UnknownBackbone";
    case ErrorCode::EmbeddingDimMismatch: return "EmbeddingDimMismatch";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::EmptyManifest: return "EmptyManifest";
    case ErrorCode::DecodeFailure: return "DecodeFailure";
    case ErrorCode::UnsupportedEncoding: return "UnsupportedEncoding";
    case ErrorCode::CorruptCheckpoint: return "CorruptCheckpoint";
    case ErrorCode::PretrainedWeightsUnavailable: return "PretrainedWeightsUnavailable";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::MissingFold: return "MissingFold";
    case ErrorCode::DuplicateFold: return "DuplicateFold";
    case ErrorCode::IncomparableReports: return "IncomparableReports";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::EmptySplit: return "EmptySplit";
    case ErrorCode::NonFiniteLoss: return "NonFiniteLoss";
    case ErrorCode::NonFiniteGradient: return "NonFiniteGradient";
    case ErrorCode::PerplexityInfeasible: return "PerplexityInfeasible";
    case ErrorCode::InvalidParentCount: return "InvalidParentCount";
    case ErrorCode::UnparseableReply: return "UnparseableReply";
    case ErrorCode::ProviderUnreachable: return "ProviderUnreachable";
    case ErrorCode::OntologyGenerationFailed: return "OntologyGenerationFailed";
    case ErrorCode::ClassCountTooSmall: return "ClassCountTooSmall";
    case ErrorCode::OntologyMismatch: return "OntologyMismatch";
    case ErrorCode::UnassignedLabel: return "UnassignedLabel";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }
  ErrorCategory category() const { return category_of(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace echo

#endif  // ECHO_CORE_ERROR_HPP_
