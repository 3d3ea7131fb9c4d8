// tashkeel-eval: diacritic recognition scoring for Arabic ASR output
// and text diacritizers, plus a trainable majority-form restorer.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tashkeel/corpusio.hpp"
#include "tashkeel/errors.hpp"
#include "tashkeel/metrics.hpp"
#include "tashkeel/orthography.hpp"
#include "tashkeel/restorer.hpp"
#include "tashkeel/version.hpp"

namespace {

using namespace tashkeel;

struct CommonOpts {
  std::string format = "markdown";
  bool lenient = false;
  std::string coverage_mode = "marks";
  std::string case_ending = "both";
  unsigned jobs = 1;

  ParsePolicy policy() const {
    return lenient ? ParsePolicy::Lenient : ParsePolicy::Strict;
  }
  EvalOptions eval_options() const {
    return {coverage_mode_from_name(coverage_mode), jobs};
  }
  ReportFormat report_format() const { return report_format_from_name(format); }
  CaseEndingDisplay case_display() const {
    if (case_ending == "with") return CaseEndingDisplay::WithOnly;
    if (case_ending == "without") return CaseEndingDisplay::WithoutOnly;
    return CaseEndingDisplay::Both;
  }
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_report_flags) {
  cmd->add_flag("--lenient", opts.lenient,
                "repair malformed diacritic sequences instead of failing");
  cmd->add_flag("--strict", [&opts](std::int64_t) { opts.lenient = false; },
                "reject malformed diacritic sequences (default)");
  if (with_report_flags) {
    cmd->add_option("--format", opts.format, "json|markdown|tsv")
        ->check(CLI::IsMember({"json", "markdown", "tsv"}));
    cmd->add_option("--coverage-mode", opts.coverage_mode,
                    "marks: literal mark count (can exceed 100%); "
                    "marked-letters: letters carrying any mark")
        ->check(CLI::IsMember({"marks", "marked-letters"}));
    cmd->add_option("--case-ending", opts.case_ending,
                    "which precision/DER variant human formats show")
        ->check(CLI::IsMember({"with", "without", "both"}));
    cmd->add_option("--jobs", opts.jobs, "worker threads for per-record tallies")
        ->check(CLI::PositiveNumber);
  }
}

// Parses one raw line, naming the record in any error.
SentenceForm parse_record(const std::string& raw, const std::string& id,
                          const char* side, ParsePolicy policy) {
  try {
    return parse(normalize(raw), policy);
  } catch (const Error& e) {
    throw Error(e.kind(), "record " + id + " (" + side + "): " + e.message());
  }
}

struct ParsedCorpus {
  std::vector<std::string> ids;
  std::vector<SentenceForm> refs;
  std::vector<SentenceForm> hyps;
};

ParsedCorpus parse_pair_corpus(const std::vector<EvalRecord>& records,
                               ParsePolicy policy, const char* ref_side,
                               const char* hyp_side) {
  ParsedCorpus corpus;
  corpus.ids.reserve(records.size());
  corpus.refs.reserve(records.size());
  corpus.hyps.reserve(records.size());
  for (const EvalRecord& record : records) {
    if (!record.hyp.has_value()) {
      throw Error(ErrorKind::MalformedRecord,
                  "record " + record.id + " has no '" + std::string(hyp_side) + "' text");
    }
    corpus.ids.push_back(record.id);
    corpus.refs.push_back(parse_record(record.ref, record.id, ref_side, policy));
    corpus.hyps.push_back(parse_record(*record.hyp, record.id, hyp_side, policy));
  }
  return corpus;
}

std::vector<EvalRecord> load_pair_input(const std::string& jsonl,
                                        const std::string& ref_path,
                                        const std::string& hyp_path) {
  if (!jsonl.empty()) return load_jsonl(jsonl);
  return load_parallel(ref_path, hyp_path);
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoFailure, "cannot write " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::IoFailure, "short write to " + path);
}

// Line-by-line text transform shared by strip and restore.
std::string transform_lines(const std::vector<EvalRecord>& records, ParsePolicy policy,
                            const std::function<SentenceForm(SentenceForm)>& fn) {
  std::string out;
  for (const EvalRecord& record : records) {
    out += render(fn(parse_record(record.ref, record.id, "input", policy)));
    out.push_back('\n');
  }
  return out;
}

int run_strip(const std::string& in, const std::string& out, const CommonOpts& opts) {
  const auto records = load_lines(in);
  write_output(out, transform_lines(records, opts.policy(),
                                    [](SentenceForm s) { return strip(s); }));
  return 0;
}

int run_stats(const std::string& in, const CommonOpts& opts) {
  const auto records = load_lines(in);
  TextCounts total;
  for (const EvalRecord& record : records) {
    const TextCounts c = counts(parse_record(record.ref, record.id, "input", opts.policy()));
    total.words += c.words;
    total.letters += c.letters;
    total.marks += c.marks;
    total.marked_letters += c.marked_letters;
  }
  if (total.letters == 0) {
    throw Error(ErrorKind::NoArabicLetters, "no Arabic letters in " + in);
  }
  const CoverageMode mode = coverage_mode_from_name(opts.coverage_mode);
  const std::uint64_t numerator =
      mode == CoverageMode::Marks ? total.marks : total.marked_letters;
  const double coverage =
      static_cast<double>(numerator) / static_cast<double>(total.letters);

  if (opts.format == "json") {
    char buffer[512];
    std::snprintf(buffer, sizeof(buffer),
                  "{\"words\": %llu, \"letters\": %llu, \"marks\": %llu, "
                  "\"marked_letters\": %llu, \"coverage\": %.17g}\n",
                  static_cast<unsigned long long>(total.words),
                  static_cast<unsigned long long>(total.letters),
                  static_cast<unsigned long long>(total.marks),
                  static_cast<unsigned long long>(total.marked_letters), coverage);
    std::fputs(buffer, stdout);
    return 0;
  }
  std::printf("words\t%llu\n", static_cast<unsigned long long>(total.words));
  std::printf("letters\t%llu\n", static_cast<unsigned long long>(total.letters));
  std::printf("marks\t%llu\n", static_cast<unsigned long long>(total.marks));
  std::printf("coverage\t%.2f%%\n", coverage * 100.0);
  return 0;
}

int run_eval_asr(const std::string& jsonl, const std::string& ref_path,
                 const std::string& hyp_path, const std::string& condition,
                 const CommonOpts& opts) {
  const auto records = load_pair_input(jsonl, ref_path, hyp_path);
  const ParsedCorpus corpus = parse_pair_corpus(records, opts.policy(), "ref", "hyp");
  const AsrReport report =
      evaluate_asr(corpus.refs, corpus.hyps, make_condition(condition), opts.eval_options());
  write_output("", emit_report(report, opts.report_format(), opts.case_display()));
  return 0;
}

int run_eval_diac(const std::string& jsonl, const std::string& gold_path,
                  const std::string& pred_path, const CommonOpts& opts) {
  const auto records = load_pair_input(jsonl, gold_path, pred_path);
  const ParsedCorpus corpus = parse_pair_corpus(records, opts.policy(), "gold", "pred");
  DiacritizerReport report;
  try {
    report = evaluate_diacritizer(corpus.refs, corpus.hyps, opts.eval_options());
  } catch (const Error& e) {
    if (e.record_index() && *e.record_index() < corpus.ids.size()) {
      throw Error(e.kind(),
                  "record " + corpus.ids[*e.record_index()] + ": " + e.message());
    }
    throw;
  }
  write_output("", emit_report(report, opts.report_format(), opts.case_display()));
  return 0;
}

int run_train(const std::string& corpus_path, const std::string& model_out,
              const CommonOpts& opts) {
  const auto records = load_lines(corpus_path);
  std::vector<SentenceForm> corpus;
  corpus.reserve(records.size());
  for (const EvalRecord& record : records) {
    corpus.push_back(parse_record(record.ref, record.id, "input", opts.policy()));
  }
  const LexiconModel model = LexiconModel::train(corpus);
  model.save_file(model_out);
  const TrainingStats& stats = model.stats();
  std::fprintf(stderr,
               "trained on %llu records, %llu tokens; %llu forms, ambiguity %.2f%%\n",
               static_cast<unsigned long long>(stats.records),
               static_cast<unsigned long long>(stats.tokens),
               static_cast<unsigned long long>(stats.unique_keys),
               stats.ambiguity_rate * 100.0);
  return 0;
}

int run_restore(const std::string& model_path, const std::string& in,
                const std::string& out, const CommonOpts& opts) {
  const LexiconModel model = LexiconModel::load_file(model_path);
  const auto records = load_lines(in);
  write_output(out, transform_lines(records, opts.policy(), [&model](SentenceForm s) {
                 return model.restore(s);
               }));
  return 0;
}

int run_pipeline(const std::string& ref_path, const std::string& hyp_path,
                 const std::string& model_path, bool ad_mode, const CommonOpts& opts) {
  const LexiconModel model = LexiconModel::load_file(model_path);
  const auto records = load_parallel(ref_path, hyp_path);
  ParsedCorpus corpus = parse_pair_corpus(records, opts.policy(), "ref", "hyp");

  Condition condition;
  if (ad_mode) {
    // Reference side loses its gold marks and gets machine ones back.
    for (SentenceForm& ref : corpus.refs) ref = model.restore(strip(ref));
    condition = make_condition("AD:lexicon");
  } else {
    // Undiacritized hypotheses are post-processed by the restorer.
    for (SentenceForm& hyp : corpus.hyps) hyp = model.restore(strip(hyp));
    condition = make_condition("UD+lexicon");
  }
  const AsrReport report =
      evaluate_asr(corpus.refs, corpus.hyps, condition, opts.eval_options());
  write_output("", emit_report(report, opts.report_format(), opts.case_display()));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diacritic recognition evaluation for Arabic ASR and text diacritizers"};
  app.set_version_flag("--version", std::string("tashkeel-eval ") + kToolkitVersion);
  app.require_subcommand(1);

  CommonOpts opts;

  auto* strip_cmd = app.add_subcommand("strip", "remove all diacritics, line by line");
  std::string strip_in, strip_out;
  strip_cmd->add_option("input", strip_in, "text file, one utterance per line")->required();
  strip_cmd->add_option("output", strip_out, "output path (default stdout)");
  add_common(strip_cmd, opts, false);

  auto* stats_cmd = app.add_subcommand("stats", "letter, mark and coverage counts");
  std::string stats_in;
  stats_cmd->add_option("input", stats_in, "text file")->required();
  add_common(stats_cmd, opts, true);

  auto* asr_cmd = app.add_subcommand("eval-asr", "score ASR hypotheses against references");
  std::string asr_ref, asr_hyp, asr_jsonl, asr_condition;
  asr_cmd->add_option("ref", asr_ref, "reference transcript file");
  asr_cmd->add_option("hyp", asr_hyp, "hypothesis transcript file");
  asr_cmd->add_option("--jsonl", asr_jsonl, "JSONL corpus with id/ref/hyp fields");
  asr_cmd->add_option("--condition", asr_condition, "row label, e.g. MD or UD+D2");
  add_common(asr_cmd, opts, true);

  auto* diac_cmd = app.add_subcommand("eval-diac", "score a diacritizer against gold text");
  std::string diac_gold, diac_pred, diac_jsonl;
  diac_cmd->add_option("gold", diac_gold, "gold diacritized file");
  diac_cmd->add_option("pred", diac_pred, "predicted diacritized file (same base text)");
  diac_cmd->add_option("--jsonl", diac_jsonl, "JSONL corpus with id/ref (gold), hyp (pred)");
  add_common(diac_cmd, opts, true);

  auto* train_cmd = app.add_subcommand("train", "train the majority-form lexicon restorer");
  std::string train_corpus, train_model;
  train_cmd->add_option("corpus", train_corpus, "diacritized training text")->required();
  train_cmd->add_option("model", train_model, "model output path")->required();
  add_common(train_cmd, opts, false);

  auto* restore_cmd = app.add_subcommand("restore", "diacritize text with a trained model");
  std::string restore_model, restore_in, restore_out;
  restore_cmd->add_option("model", restore_model, "trained lexicon model")->required();
  restore_cmd->add_option("input", restore_in, "text file to diacritize")->required();
  restore_cmd->add_option("output", restore_out, "output path (default stdout)");
  add_common(restore_cmd, opts, false);

  auto* pipe_cmd = app.add_subcommand(
      "pipeline", "strip + restore one side, then run the full ASR evaluation");
  std::string pipe_ref, pipe_hyp, pipe_model;
  bool pipe_ad = false;
  pipe_cmd->add_option("ref", pipe_ref, "reference transcript file")->required();
  pipe_cmd->add_option("hyp", pipe_hyp, "hypothesis transcript file")->required();
  pipe_cmd->add_option("--model", pipe_model, "trained lexicon model")->required();
  pipe_cmd->add_flag("--ad", pipe_ad,
                     "restore the stripped REFERENCE instead of the hypothesis");
  add_common(pipe_cmd, opts, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(strip_cmd)) return run_strip(strip_in, strip_out, opts);
    if (app.got_subcommand(stats_cmd)) return run_stats(stats_in, opts);
    if (app.got_subcommand(asr_cmd)) {
      if (asr_jsonl.empty() && (asr_ref.empty() || asr_hyp.empty())) {
        std::fprintf(stderr, "tashkeel-eval: eval-asr needs ref and hyp files or --jsonl\n");
        return 1;
      }
      return run_eval_asr(asr_jsonl, asr_ref, asr_hyp, asr_condition, opts);
    }
    if (app.got_subcommand(diac_cmd)) {
      if (diac_jsonl.empty() && (diac_gold.empty() || diac_pred.empty())) {
        std::fprintf(stderr, "tashkeel-eval: eval-diac needs gold and pred files or --jsonl\n");
        return 1;
      }
      return run_eval_diac(diac_jsonl, diac_gold, diac_pred, opts);
    }
    if (app.got_subcommand(train_cmd)) return run_train(train_corpus, train_model, opts);
    if (app.got_subcommand(restore_cmd)) {
      return run_restore(restore_model, restore_in, restore_out, opts);
    }
    if (app.got_subcommand(pipe_cmd)) {
      return run_pipeline(pipe_ref, pipe_hyp, pipe_model, pipe_ad, opts);
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "tashkeel-eval: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "tashkeel-eval: %s\n", e.what());
    return 2;
  }
  return 0;
}
