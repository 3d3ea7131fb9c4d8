#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tashkeel/metrics.hpp"

namespace tashkeel {

// Raw text is kept pristine at ingest; normalization is an explicit
// downstream stage.
struct EvalRecord {
  std::string id;
  std::string ref;
  std::optional<std::string> hyp;

  bool operator==(const EvalRecord&) const = default;
};

// One utterance per line, UTF-8, LF or CRLF, final newline optional.
// Line i of each file pairs into the record with id = i (1-based).
std::vector<EvalRecord> load_parallel(const std::filesystem::path& ref_path,
                                      const std::filesystem::path& hyp_path);

// Single file loaded the same way, hyp left empty.
std::vector<EvalRecord> load_lines(const std::filesystem::path& path);

// Newline-delimited JSON objects: string "id", string "ref",
// optional string "hyp". Duplicate ids are rejected.
std::vector<EvalRecord> load_jsonl(const std::filesystem::path& path);

enum class ReportFormat { Json, Markdown, Tsv };

ReportFormat report_format_from_name(std::string_view name);

// Which precision/DER variant the human-readable formats show.
// JSON always carries both.
enum class CaseEndingDisplay { Both, WithOnly, WithoutOnly };

// json: key-stable, full precision, round-trippable via the parse_*
// functions. markdown/tsv: one header plus one row, ratios as
// percentages with 2 decimals, absent metrics as em-dash.
std::string emit_report(const AsrReport& report, ReportFormat format,
                        CaseEndingDisplay display = CaseEndingDisplay::Both);
std::string emit_report(const DiacritizerReport& report, ReportFormat format,
                        CaseEndingDisplay display = CaseEndingDisplay::Both);

AsrReport parse_asr_report_json(std::string_view bytes);
DiacritizerReport parse_diacritizer_report_json(std::string_view bytes);

}  // namespace tashkeel
