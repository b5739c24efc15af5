#ifndef SNER_ERROR_H_
#define SNER_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sner {

// Machine-readable error category. The CLI prints these verbatim in the
// `error:<code>:` prefix, so the names are part of the external contract.
enum class ErrorCode {
  kMalformedLine,
  kUnknownCategory,
  kDuplicateEntry,
  kMissingDataFile,
  kBadConfig,
  kPositionOutOfRange,
  kUnknownFormat,
  kUnknownLabel,
  kEmptyCorpus,
  kCorruptStore,
  kIOFailure,
  kInvalidInput,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sner

#endif  // SNER_ERROR_H_
