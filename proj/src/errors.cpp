#include "tashkeel/errors.hpp"

namespace tashkeel {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LeadingDiacritic: return "LeadingDiacritic";
    case ErrorKind::IllegalCluster: return "IllegalCluster";
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::EmptyReference: return "EmptyReference";
    case ErrorKind::NoArabicLetters: return "NoArabicLetters";
    case ErrorKind::BaseTextMismatch: return "BaseTextMismatch";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::RecordCountMismatch: return "RecordCountMismatch";
    case ErrorKind::EmptyCorpus: return "EmptyCorpus";
    case ErrorKind::MalformedModelFile: return "MalformedModelFile";
    case ErrorKind::LineCountMismatch: return "LineCountMismatch";
    case ErrorKind::InvalidUtf8: return "InvalidUtf8";
    case ErrorKind::MalformedRecord: return "MalformedRecord";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::IoFailure: return "IoFailure";
  }
  return "Error";
}

}  // namespace tashkeel
