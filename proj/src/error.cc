#include "sner/error.h"

namespace sner {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kUnknownCategory: return "UnknownCategory";
    case ErrorCode::kDuplicateEntry: return "DuplicateEntry";
    case ErrorCode::kMissingDataFile: return "MissingDataFile";
    case ErrorCode::kBadConfig: return "BadConfig";
    case ErrorCode::kPositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::kUnknownFormat: return "UnknownFormat";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kCorruptStore: return "CorruptStore";
    case ErrorCode::kIOFailure: return "IOFailure";
    case ErrorCode::kInvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace sner
