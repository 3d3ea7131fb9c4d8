#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "tashkeel/alignment.hpp"
#include "tashkeel/orthography.hpp"

namespace tashkeel {

// Literal mark counting can push coverage past 100% on dense text
// (shadda+vowel letters contribute 2); MarkedLetters caps it at 1.
enum class CoverageMode { Marks, MarkedLetters };

const char* coverage_mode_name(CoverageMode mode);
CoverageMode coverage_mode_from_name(std::string_view name);

enum class ConditionLabel { UD, MD, AD, Other };

struct Condition {
  ConditionLabel label = ConditionLabel::Other;
  std::string tag;  // free-form pipeline tag, e.g. "UD+lexicon"

  bool operator==(const Condition&) const = default;
};

const char* condition_label_name(ConditionLabel label);

// Label inferred from the tag's leading UD/MD/AD token, Other otherwise.
Condition make_condition(std::string_view tag);

// Word-level edit cost over all record pairs divided by total reference
// word count. Token equality covers diacritics only when requested.
double wer(std::span<const SentenceForm> refs, std::span<const SentenceForm> hyps,
           bool with_diacritics);

// Codepoint-level edit cost over rendered sentences (words joined by
// single spaces; the spaces count) divided by reference codepoint count.
double cer(std::span<const SentenceForm> refs, std::span<const SentenceForm> hyps,
           bool with_diacritics);

// Total marks (or marked letters) divided by total Arabic letters.
double coverage(std::span<const SentenceForm> corpus,
                CoverageMode mode = CoverageMode::Marks);

struct PrecisionResult {
  std::optional<double> value;  // absent when nothing was compared
  std::uint64_t compared = 0;
  std::uint64_t correct = 0;
};

// Cluster agreement over matched words, counting only positions where
// both sides carry at least one mark. The word-final position is
// excluded when include_case_ending is false. Micro-averaged.
PrecisionResult precision(std::span<const MatchedWordPair> pairs,
                          bool include_case_ending);

struct DerResult {
  std::optional<double> value;  // absent when no gold-marked positions
  std::uint64_t counted = 0;
  std::uint64_t errors = 0;
};

// Error rate over gold-marked positions; an unmarked prediction is an
// error, unlike precision. Requires equal base text.
DerResult der(const SentenceForm& gold, const SentenceForm& predicted,
              bool include_case_ending);
DerResult der(std::span<const SentenceForm> gold,
              std::span<const SentenceForm> predicted, bool include_case_ending);

struct AsrCounts {
  std::uint64_t records = 0;
  std::uint64_t ref_words = 0;
  std::uint64_t wer_errors_plain = 0;
  std::uint64_t wer_errors_diac = 0;
  std::uint64_t ref_chars_plain = 0;
  std::uint64_t cer_errors_plain = 0;
  std::uint64_t ref_chars_diac = 0;
  std::uint64_t cer_errors_diac = 0;
  std::uint64_t ref_letters = 0;
  std::uint64_t ref_marks = 0;
  std::uint64_t ref_marked_letters = 0;
  std::uint64_t hyp_letters = 0;
  std::uint64_t hyp_marks = 0;
  std::uint64_t hyp_marked_letters = 0;
  std::uint64_t matched_pairs = 0;
  std::uint64_t compared_with_case = 0;
  std::uint64_t correct_with_case = 0;
  std::uint64_t compared_without_case = 0;
  std::uint64_t correct_without_case = 0;

  bool operator==(const AsrCounts&) const = default;
};

// One system's row: error rates with and without diacritics, coverage
// of both sides, and matched-word precision in both case variants.
struct AsrReport {
  Condition condition;
  CoverageMode coverage_mode = CoverageMode::Marks;
  double wer_plain = 0;
  double cer_plain = 0;
  double wer_diac = 0;
  double cer_diac = 0;
  std::optional<double> coverage_ref;
  std::optional<double> coverage_hyp;
  std::optional<double> precision_with_case;
  std::optional<double> precision_without_case;
  AsrCounts counts;

  bool operator==(const AsrReport&) const = default;
};

struct DiacCounts {
  std::uint64_t records = 0;
  std::uint64_t letters = 0;
  std::uint64_t gold_marks = 0;
  std::uint64_t gold_marked_letters = 0;
  std::uint64_t predicted_marks = 0;
  std::uint64_t predicted_marked_letters = 0;
  std::uint64_t counted_with_case = 0;
  std::uint64_t errors_with_case = 0;
  std::uint64_t counted_without_case = 0;
  std::uint64_t errors_without_case = 0;

  bool operator==(const DiacCounts&) const = default;
};

struct DiacritizerReport {
  CoverageMode coverage_mode = CoverageMode::Marks;
  std::optional<double> coverage;  // of the prediction
  std::optional<double> der_with_case;
  std::optional<double> der_without_case;
  DiacCounts counts;

  bool operator==(const DiacritizerReport&) const = default;
};

struct EvalOptions {
  CoverageMode coverage_mode = CoverageMode::Marks;
  unsigned jobs = 1;  // record tallies may run in parallel; the reduction
                      // is an ordered integer sum, so output is identical
};

AsrReport evaluate_asr(std::span<const SentenceForm> refs,
                       std::span<const SentenceForm> hyps,
                       const Condition& condition, const EvalOptions& options = {});

DiacritizerReport evaluate_diacritizer(std::span<const SentenceForm> gold,
                                       std::span<const SentenceForm> predicted,
                                       const EvalOptions& options = {});

}  // namespace tashkeel
