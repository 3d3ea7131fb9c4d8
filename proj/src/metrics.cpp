#include "tashkeel/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <thread>
#include <vector>

#include "tashkeel/errors.hpp"
#include "tashkeel/unicode.hpp"

namespace tashkeel {

namespace {

void require_paired(std::size_t refs, std::size_t hyps) {
  if (refs != hyps) {
    throw Error(ErrorKind::RecordCountMismatch,
                "reference has " + std::to_string(refs) + " records, hypothesis has " +
                    std::to_string(hyps));
  }
}

std::vector<std::string> word_tokens(const SentenceForm& s, bool with_diacritics) {
  std::vector<std::string> tokens;
  tokens.reserve(s.words.size());
  for (const WordForm& w : s.words) {
    tokens.push_back(with_diacritics ? render(w) : stripped_key(w));
  }
  return tokens;
}

std::u32string char_tokens(const SentenceForm& s, bool with_diacritics) {
  std::string text = with_diacritics ? render(s) : render(strip(s));
  return utf8_decode(text);
}

// Runs fn(i) for i in [0, n); results land by index so the later
// reduction is order-independent of scheduling.
void for_each_index(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(n));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

struct PairTally {
  std::uint64_t compared_with = 0, correct_with = 0;
  std::uint64_t compared_without = 0, correct_without = 0;
};

PairTally tally_pair(const MatchedWordPair& pair) {
  const auto& rg = pair.ref_word.graphemes;
  const auto& hg = pair.hyp_word.graphemes;
  if (rg.size() != hg.size()) {
    throw Error(ErrorKind::InvariantViolation,
                "matched pair with different stripped forms");
  }
  PairTally t;
  for (std::size_t pos = 0; pos < rg.size(); ++pos) {
    if (rg[pos].base != hg[pos].base) {
      throw Error(ErrorKind::InvariantViolation,
                  "matched pair with different stripped forms");
    }
    const MarkCluster& rc = rg[pos].cluster;
    const MarkCluster& hc = hg[pos].cluster;
    if (rc.empty() || hc.empty()) continue;
    const bool correct = rc == hc;
    ++t.compared_with;
    t.correct_with += correct;
    if (pos + 1 < rg.size()) {
      ++t.compared_without;
      t.correct_without += correct;
    }
  }
  return t;
}

struct DerTally {
  std::uint64_t counted_with = 0, errors_with = 0;
  std::uint64_t counted_without = 0, errors_without = 0;
};

DerTally tally_der(const SentenceForm& gold, const SentenceForm& predicted,
                   std::size_t record_index) {
  const auto mismatch = [&] {
    return Error(ErrorKind::BaseTextMismatch,
                 "gold and prediction differ in base text", record_index);
  };
  if (gold.words.size() != predicted.words.size()) throw mismatch();
  DerTally t;
  for (std::size_t w = 0; w < gold.words.size(); ++w) {
    const auto& gg = gold.words[w].graphemes;
    const auto& pg = predicted.words[w].graphemes;
    if (gg.size() != pg.size()) throw mismatch();
    for (std::size_t pos = 0; pos < gg.size(); ++pos) {
      if (gg[pos].base != pg[pos].base) throw mismatch();
      if (gg[pos].cluster.empty()) continue;
      const bool error = pg[pos].cluster != gg[pos].cluster;
      ++t.counted_with;
      t.errors_with += error;
      if (pos + 1 < gg.size()) {
        ++t.counted_without;
        t.errors_without += error;
      }
    }
  }
  return t;
}

std::optional<double> opt_ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

AsrCounts asr_record_tally(const SentenceForm& ref, const SentenceForm& hyp) {
  AsrCounts c;
  c.records = 1;

  const auto ref_plain = word_tokens(ref, false);
  const auto hyp_plain = word_tokens(hyp, false);
  c.ref_words = ref_plain.size();
  c.wer_errors_plain = edit_cost<std::string>(ref_plain, hyp_plain);
  const auto ref_diac = word_tokens(ref, true);
  const auto hyp_diac = word_tokens(hyp, true);
  c.wer_errors_diac = edit_cost<std::string>(ref_diac, hyp_diac);

  for (bool with_diacritics : {false, true}) {
    const std::u32string r = char_tokens(ref, with_diacritics);
    const std::u32string h = char_tokens(hyp, with_diacritics);
    const std::uint64_t cost =
        edit_cost<char32_t>(std::span<const char32_t>(r.data(), r.size()),
                            std::span<const char32_t>(h.data(), h.size()));
    if (with_diacritics) {
      c.ref_chars_diac = r.size();
      c.cer_errors_diac = cost;
    } else {
      c.ref_chars_plain = r.size();
      c.cer_errors_plain = cost;
    }
  }

  const TextCounts rc = counts(ref);
  const TextCounts hc = counts(hyp);
  c.ref_letters = rc.letters;
  c.ref_marks = rc.marks;
  c.ref_marked_letters = rc.marked_letters;
  c.hyp_letters = hc.letters;
  c.hyp_marks = hc.marks;
  c.hyp_marked_letters = hc.marked_letters;

  for (const MatchedWordPair& pair : matched_pairs(ref, hyp)) {
    ++c.matched_pairs;
    const PairTally t = tally_pair(pair);
    c.compared_with_case += t.compared_with;
    c.correct_with_case += t.correct_with;
    c.compared_without_case += t.compared_without;
    c.correct_without_case += t.correct_without;
  }
  return c;
}

std::uint64_t coverage_numerator(const TextCounts& c, CoverageMode mode) {
  return mode == CoverageMode::Marks ? c.marks : c.marked_letters;
}

}  // namespace

const char* coverage_mode_name(CoverageMode mode) {
  return mode == CoverageMode::Marks ? "marks" : "marked-letters";
}

CoverageMode coverage_mode_from_name(std::string_view name) {
  if (name == "marks") return CoverageMode::Marks;
  if (name == "marked-letters") return CoverageMode::MarkedLetters;
  throw Error(ErrorKind::MalformedRecord,
              "unknown coverage mode '" + std::string(name) + "'");
}

const char* condition_label_name(ConditionLabel label) {
  switch (label) {
    case ConditionLabel::UD: return "UD";
    case ConditionLabel::MD: return "MD";
    case ConditionLabel::AD: return "AD";
    case ConditionLabel::Other: return "other";
  }
  return "other";
}

Condition make_condition(std::string_view tag) {
  Condition c;
  c.tag = std::string(tag);
  const std::string_view head = tag.substr(0, 2);
  const bool delimited = tag.size() == 2 || (tag.size() > 2 && !std::isalnum(
      static_cast<unsigned char>(tag[2])));
  if (delimited) {
    if (head == "UD") c.label = ConditionLabel::UD;
    else if (head == "MD") c.label = ConditionLabel::MD;
    else if (head == "AD") c.label = ConditionLabel::AD;
  }
  return c;
}

double wer(std::span<const SentenceForm> refs, std::span<const SentenceForm> hyps,
           bool with_diacritics) {
  require_paired(refs.size(), hyps.size());
  std::uint64_t errors = 0;
  std::uint64_t ref_words = 0;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    const auto r = word_tokens(refs[i], with_diacritics);
    const auto h = word_tokens(hyps[i], with_diacritics);
    errors += edit_cost<std::string>(r, h);
    ref_words += r.size();
  }
  if (ref_words == 0) {
    throw Error(ErrorKind::EmptyReference, "reference corpus has no words");
  }
  return static_cast<double>(errors) / static_cast<double>(ref_words);
}

double cer(std::span<const SentenceForm> refs, std::span<const SentenceForm> hyps,
           bool with_diacritics) {
  require_paired(refs.size(), hyps.size());
  std::uint64_t errors = 0;
  std::uint64_t ref_chars = 0;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    const std::u32string r = char_tokens(refs[i], with_diacritics);
    const std::u32string h = char_tokens(hyps[i], with_diacritics);
    errors += edit_cost<char32_t>(std::span<const char32_t>(r.data(), r.size()),
                                  std::span<const char32_t>(h.data(), h.size()));
    ref_chars += r.size();
  }
  if (ref_chars == 0) {
    throw Error(ErrorKind::EmptyReference, "reference corpus has no characters");
  }
  return static_cast<double>(errors) / static_cast<double>(ref_chars);
}

double coverage(std::span<const SentenceForm> corpus, CoverageMode mode) {
  std::uint64_t letters = 0;
  std::uint64_t num = 0;
  for (const SentenceForm& s : corpus) {
    const TextCounts c = counts(s);
    letters += c.letters;
    num += coverage_numerator(c, mode);
  }
  if (letters == 0) {
    throw Error(ErrorKind::NoArabicLetters, "corpus has no Arabic letters");
  }
  return static_cast<double>(num) / static_cast<double>(letters);
}

PrecisionResult precision(std::span<const MatchedWordPair> pairs,
                          bool include_case_ending) {
  PrecisionResult r;
  for (const MatchedWordPair& pair : pairs) {
    const PairTally t = tally_pair(pair);
    r.compared += include_case_ending ? t.compared_with : t.compared_without;
    r.correct += include_case_ending ? t.correct_with : t.correct_without;
  }
  r.value = opt_ratio(r.correct, r.compared);
  return r;
}

DerResult der(const SentenceForm& gold, const SentenceForm& predicted,
              bool include_case_ending) {
  const SentenceForm* g = &gold;
  return der(std::span<const SentenceForm>(g, 1),
             std::span<const SentenceForm>(&predicted, 1), include_case_ending);
}

DerResult der(std::span<const SentenceForm> gold,
              std::span<const SentenceForm> predicted, bool include_case_ending) {
  require_paired(gold.size(), predicted.size());
  DerResult r;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const DerTally t = tally_der(gold[i], predicted[i], i);
    r.counted += include_case_ending ? t.counted_with : t.counted_without;
    r.errors += include_case_ending ? t.errors_with : t.errors_without;
  }
  r.value = opt_ratio(r.errors, r.counted);
  return r;
}

AsrReport evaluate_asr(std::span<const SentenceForm> refs,
                       std::span<const SentenceForm> hyps,
                       const Condition& condition, const EvalOptions& options) {
  require_paired(refs.size(), hyps.size());

  std::vector<AsrCounts> tallies(refs.size());
  std::vector<std::exception_ptr> failures(refs.size());
  for_each_index(refs.size(), options.jobs, [&](std::size_t i) {
    try {
      tallies[i] = asr_record_tally(refs[i], hyps[i]);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  });
  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  AsrCounts total;
  for (const AsrCounts& c : tallies) {
    total.records += c.records;
    total.ref_words += c.ref_words;
    total.wer_errors_plain += c.wer_errors_plain;
    total.wer_errors_diac += c.wer_errors_diac;
    total.ref_chars_plain += c.ref_chars_plain;
    total.cer_errors_plain += c.cer_errors_plain;
    total.ref_chars_diac += c.ref_chars_diac;
    total.cer_errors_diac += c.cer_errors_diac;
    total.ref_letters += c.ref_letters;
    total.ref_marks += c.ref_marks;
    total.ref_marked_letters += c.ref_marked_letters;
    total.hyp_letters += c.hyp_letters;
    total.hyp_marks += c.hyp_marks;
    total.hyp_marked_letters += c.hyp_marked_letters;
    total.matched_pairs += c.matched_pairs;
    total.compared_with_case += c.compared_with_case;
    total.correct_with_case += c.correct_with_case;
    total.compared_without_case += c.compared_without_case;
    total.correct_without_case += c.correct_without_case;
  }

  if (total.ref_words == 0) {
    throw Error(ErrorKind::EmptyReference, "reference corpus has no words");
  }

  AsrReport report;
  report.condition = condition;
  report.coverage_mode = options.coverage_mode;
  report.counts = total;
  report.wer_plain = static_cast<double>(total.wer_errors_plain) /
                     static_cast<double>(total.ref_words);
  report.wer_diac = static_cast<double>(total.wer_errors_diac) /
                    static_cast<double>(total.ref_words);
  // ref_chars >= ref_words > 0 here; spaces and bases survive stripping
  report.cer_plain = static_cast<double>(total.cer_errors_plain) /
                     static_cast<double>(total.ref_chars_plain);
  report.cer_diac = static_cast<double>(total.cer_errors_diac) /
                    static_cast<double>(total.ref_chars_diac);
  const bool marks_mode = options.coverage_mode == CoverageMode::Marks;
  report.coverage_ref = opt_ratio(
      marks_mode ? total.ref_marks : total.ref_marked_letters, total.ref_letters);
  report.coverage_hyp = opt_ratio(
      marks_mode ? total.hyp_marks : total.hyp_marked_letters, total.hyp_letters);
  report.precision_with_case =
      opt_ratio(total.correct_with_case, total.compared_with_case);
  report.precision_without_case =
      opt_ratio(total.correct_without_case, total.compared_without_case);
  return report;
}

DiacritizerReport evaluate_diacritizer(std::span<const SentenceForm> gold,
                                       std::span<const SentenceForm> predicted,
                                       const EvalOptions& options) {
  require_paired(gold.size(), predicted.size());

  std::vector<DiacCounts> tallies(gold.size());
  // BaseTextMismatch raised on a worker thread must surface with its
  // record index intact; remember the earliest one.
  std::vector<std::exception_ptr> failures(gold.size());
  for_each_index(gold.size(), options.jobs, [&](std::size_t i) {
    try {
      DiacCounts c;
      c.records = 1;
      const TextCounts gc = counts(gold[i]);
      const TextCounts pc = counts(predicted[i]);
      c.letters = gc.letters;
      c.gold_marks = gc.marks;
      c.gold_marked_letters = gc.marked_letters;
      c.predicted_marks = pc.marks;
      c.predicted_marked_letters = pc.marked_letters;
      const DerTally t = tally_der(gold[i], predicted[i], i);
      c.counted_with_case = t.counted_with;
      c.errors_with_case = t.errors_with;
      c.counted_without_case = t.counted_without;
      c.errors_without_case = t.errors_without;
      tallies[i] = c;
    } catch (...) {
      failures[i] = std::current_exception();
    }
  });
  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  DiacCounts total;
  for (const DiacCounts& c : tallies) {
    total.records += c.records;
    total.letters += c.letters;
    total.gold_marks += c.gold_marks;
    total.gold_marked_letters += c.gold_marked_letters;
    total.predicted_marks += c.predicted_marks;
    total.predicted_marked_letters += c.predicted_marked_letters;
    total.counted_with_case += c.counted_with_case;
    total.errors_with_case += c.errors_with_case;
    total.counted_without_case += c.counted_without_case;
    total.errors_without_case += c.errors_without_case;
  }

  DiacritizerReport report;
  report.coverage_mode = options.coverage_mode;
  report.counts = total;
  const bool marks_mode = options.coverage_mode == CoverageMode::Marks;
  report.coverage = opt_ratio(
      marks_mode ? total.predicted_marks : total.predicted_marked_letters,
      total.letters);
  report.der_with_case = opt_ratio(total.errors_with_case, total.counted_with_case);
  report.der_without_case =
      opt_ratio(total.errors_without_case, total.counted_without_case);
  return report;
}

}  // namespace tashkeel
