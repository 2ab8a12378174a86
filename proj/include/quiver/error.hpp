#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quiver {

enum class ErrorCode {
  DuplicateId,
  InvalidId,
  DanglingEndpoint,
  UnknownEdge,
  UnknownVertex,
  InfiniteBundlePresent,
  ResultCapExceeded,
  HasLoop,
  IndexOutOfRange,
  InvalidPermutation,
  DimensionMismatch,
  InvalidRange,
  NoKPath,
  NotTotallyOrdered,
  NotInFkForm,
  SearchBudgetExceeded,
  ConfigInvalid,
  NotHereditary,
  PartialMap,
  NotInjective,
  NotHomomorphism,
  IncompatibleOverlap,
  StarIdCollision,
  TooManyVertices,
  BudgetExceeded,
  GraphMismatch,
  InvalidWord,
  NotAdmissible,
  NotRowFinite,
  NotAdmissibleIntersection,
  EmptyGraph,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode c) noexcept {
  switch (c) {
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::InvalidId: return "InvalidId";
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::InfiniteBundlePresent: return "InfiniteBundlePresent";
    case ErrorCode::ResultCapExceeded: return "ResultCapExceeded";
    case ErrorCode::HasLoop: return "HasLoop";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::NoKPath: return "NoKPath";
    case ErrorCode::NotTotallyOrdered: return "NotTotallyOrdered";
    case ErrorCode::NotInFkForm: return "NotInFkForm";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::NotHereditary: return "NotHereditary";
    case ErrorCode::PartialMap: return "PartialMap";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::IncompatibleOverlap: return "IncompatibleOverlap";
    case ErrorCode::StarIdCollision: return "StarIdCollision";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::InvalidWord: return "InvalidWord";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotRowFinite: return "NotRowFinite";
    case ErrorCode::NotAdmissibleIntersection: return "NotAdmissibleIntersection";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

//! Every failure raised by the library. `code()` is the stable part;
//! the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace quiver
