#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace tashkeel {

// Every recoverable failure in the toolkit maps to one of these kinds.
// The CLI turns any Error into exit code 2; the kind name is printed
// so scripts can match on it.
enum class ErrorKind {
  // orthography
  LeadingDiacritic,
  IllegalCluster,
  EmptyWord,
  // metrics
  EmptyReference,
  NoArabicLetters,
  BaseTextMismatch,
  InvariantViolation,
  RecordCountMismatch,
  // restorer
  EmptyCorpus,
  MalformedModelFile,
  // corpusio
  LineCountMismatch,
  InvalidUtf8,
  MalformedRecord,
  DuplicateId,
  IoFailure,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind),
        message_(message) {}

  Error(ErrorKind kind, const std::string& message, std::size_t record_index)
      : Error(kind, message) {
    record_index_ = record_index;
  }

  ErrorKind kind() const { return kind_; }

  // Message without the kind prefix, for callers that add context and
  // rethrow.
  const std::string& message() const { return message_; }

  // 0-based index of the offending corpus record, when the failure is
  // tied to one. Callers that know record ids translate it for display.
  std::optional<std::size_t> record_index() const { return record_index_; }

 private:
  ErrorKind kind_;
  std::string message_;
  std::optional<std::size_t> record_index_;
};

}  // namespace tashkeel
