#include "tashkeel/corpusio.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tashkeel/errors.hpp"
#include "tashkeel/unicode.hpp"
#include "tashkeel/version.hpp"

namespace tashkeel {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::IoFailure, "cannot read " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split_lines(const std::string& bytes) {
  utf8_decode(bytes);  // validate whole file up front
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    std::size_t end = bytes.find('\n', pos);
    if (end == std::string::npos) end = bytes.size();
    std::string line = bytes.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

std::string percent(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f%%", value * 100.0);
  return buffer;
}

std::string cell(const std::optional<double>& value) {
  return value ? percent(*value) : "—";
}

ordered_json opt_json(const std::optional<double>& value) {
  if (!value) return nullptr;
  return *value;
}

std::optional<double> opt_from_json(const ordered_json& value) {
  if (value.is_null()) return std::nullopt;
  return value.get<double>();
}

ConditionLabel condition_label_from_name(const std::string& name) {
  if (name == "UD") return ConditionLabel::UD;
  if (name == "MD") return ConditionLabel::MD;
  if (name == "AD") return ConditionLabel::AD;
  return ConditionLabel::Other;
}

struct Column {
  std::string header;
  std::string value;
};

std::string table(const std::vector<Column>& columns, ReportFormat format) {
  std::string out;
  if (format == ReportFormat::Markdown) {
    for (const Column& c : columns) out += "| " + c.header + " ";
    out += "|\n";
    for (std::size_t i = 0; i < columns.size(); ++i) out += "| --- ";
    out += "|\n";
    for (const Column& c : columns) out += "| " + c.value + " ";
    out += "|\n";
    return out;
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) out.push_back('\t');
    out += columns[i].header;
  }
  out.push_back('\n');
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) out.push_back('\t');
    out += columns[i].value;
  }
  out.push_back('\n');
  return out;
}

std::string display_condition(const Condition& condition) {
  if (!condition.tag.empty()) return condition.tag;
  return condition_label_name(condition.label);
}

[[noreturn]] void bad_record(std::size_t line_no, const std::string& why) {
  throw Error(ErrorKind::MalformedRecord,
              "line " + std::to_string(line_no) + ": " + why);
}

}  // namespace

std::vector<EvalRecord> load_lines(const std::filesystem::path& path) {
  const std::vector<std::string> lines = split_lines(read_file(path));
  std::vector<EvalRecord> records;
  records.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    records.push_back({std::to_string(i + 1), lines[i], std::nullopt});
  }
  return records;
}

std::vector<EvalRecord> load_parallel(const std::filesystem::path& ref_path,
                                      const std::filesystem::path& hyp_path) {
  const std::vector<std::string> refs = split_lines(read_file(ref_path));
  const std::vector<std::string> hyps = split_lines(read_file(hyp_path));
  if (refs.size() != hyps.size()) {
    throw Error(ErrorKind::LineCountMismatch,
                ref_path.string() + " has " + std::to_string(refs.size()) +
                    " lines, " + hyp_path.string() + " has " +
                    std::to_string(hyps.size()));
  }
  std::vector<EvalRecord> records;
  records.reserve(refs.size());
  for (std::size_t i = 0; i < refs.size(); ++i) {
    records.push_back({std::to_string(i + 1), refs[i], hyps[i]});
  }
  return records;
}

std::vector<EvalRecord> load_jsonl(const std::filesystem::path& path) {
  const std::vector<std::string> lines = split_lines(read_file(path));
  std::vector<EvalRecord> records;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (lines[i].empty()) continue;

    ordered_json object;
    try {
      object = ordered_json::parse(lines[i]);
    } catch (const ordered_json::exception& e) {
      bad_record(line_no, e.what());
    }
    if (!object.is_object()) bad_record(line_no, "not a JSON object");
    if (!object.contains("id") || !object["id"].is_string()) {
      bad_record(line_no, "missing string field 'id'");
    }
    if (!object.contains("ref") || !object["ref"].is_string()) {
      bad_record(line_no, "missing string field 'ref'");
    }
    EvalRecord record;
    record.id = object["id"].get<std::string>();
    record.ref = object["ref"].get<std::string>();
    if (object.contains("hyp")) {
      if (!object["hyp"].is_string()) bad_record(line_no, "field 'hyp' not a string");
      record.hyp = object["hyp"].get<std::string>();
    }
    if (!seen.insert(record.id).second) {
      throw Error(ErrorKind::DuplicateId,
                  "record id '" + record.id + "' appears twice (line " +
                      std::to_string(line_no) + ")");
    }
    records.push_back(std::move(record));
  }
  return records;
}

ReportFormat report_format_from_name(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "markdown") return ReportFormat::Markdown;
  if (name == "tsv") return ReportFormat::Tsv;
  throw Error(ErrorKind::MalformedRecord,
              "unknown report format '" + std::string(name) + "'");
}

std::string emit_report(const AsrReport& report, ReportFormat format,
                        CaseEndingDisplay display) {
  if (format == ReportFormat::Json) {
    ordered_json j;
    j["toolkit_version"] = kToolkitVersion;
    j["kind"] = "asr";
    j["condition"] = {{"label", condition_label_name(report.condition.label)},
                      {"tag", report.condition.tag}};
    j["coverage_mode"] = coverage_mode_name(report.coverage_mode);
    ordered_json& m = j["metrics"];
    m["wer_plain"] = report.wer_plain;
    m["cer_plain"] = report.cer_plain;
    m["wer_diac"] = report.wer_diac;
    m["cer_diac"] = report.cer_diac;
    m["coverage_ref"] = opt_json(report.coverage_ref);
    m["coverage_hyp"] = opt_json(report.coverage_hyp);
    m["precision_with_case"] = opt_json(report.precision_with_case);
    m["precision_without_case"] = opt_json(report.precision_without_case);
    ordered_json& c = j["counts"];
    c["records"] = report.counts.records;
    c["ref_words"] = report.counts.ref_words;
    c["wer_errors_plain"] = report.counts.wer_errors_plain;
    c["wer_errors_diac"] = report.counts.wer_errors_diac;
    c["ref_chars_plain"] = report.counts.ref_chars_plain;
    c["cer_errors_plain"] = report.counts.cer_errors_plain;
    c["ref_chars_diac"] = report.counts.ref_chars_diac;
    c["cer_errors_diac"] = report.counts.cer_errors_diac;
    c["ref_letters"] = report.counts.ref_letters;
    c["ref_marks"] = report.counts.ref_marks;
    c["ref_marked_letters"] = report.counts.ref_marked_letters;
    c["hyp_letters"] = report.counts.hyp_letters;
    c["hyp_marks"] = report.counts.hyp_marks;
    c["hyp_marked_letters"] = report.counts.hyp_marked_letters;
    c["matched_pairs"] = report.counts.matched_pairs;
    c["compared_with_case"] = report.counts.compared_with_case;
    c["correct_with_case"] = report.counts.correct_with_case;
    c["compared_without_case"] = report.counts.compared_without_case;
    c["correct_without_case"] = report.counts.correct_without_case;
    return j.dump(2) + "\n";
  }

  std::vector<Column> columns;
  columns.push_back({"Condition", display_condition(report.condition)});
  columns.push_back({"WER w.o. diac", percent(report.wer_plain)});
  columns.push_back({"CER w.o. diac", percent(report.cer_plain)});
  columns.push_back({"WER w. diac", percent(report.wer_diac)});
  columns.push_back({"CER w. diac", percent(report.cer_diac)});
  columns.push_back({"Coverage", cell(report.coverage_hyp)});
  if (display != CaseEndingDisplay::WithoutOnly) {
    columns.push_back({"Precision w. case", cell(report.precision_with_case)});
  }
  if (display != CaseEndingDisplay::WithOnly) {
    columns.push_back({"Precision w.o. case", cell(report.precision_without_case)});
  }
  return table(columns, format);
}

std::string emit_report(const DiacritizerReport& report, ReportFormat format,
                        CaseEndingDisplay display) {
  if (format == ReportFormat::Json) {
    ordered_json j;
    j["toolkit_version"] = kToolkitVersion;
    j["kind"] = "diacritizer";
    j["coverage_mode"] = coverage_mode_name(report.coverage_mode);
    ordered_json& m = j["metrics"];
    m["coverage"] = opt_json(report.coverage);
    m["der_with_case"] = opt_json(report.der_with_case);
    m["der_without_case"] = opt_json(report.der_without_case);
    ordered_json& c = j["counts"];
    c["records"] = report.counts.records;
    c["letters"] = report.counts.letters;
    c["gold_marks"] = report.counts.gold_marks;
    c["gold_marked_letters"] = report.counts.gold_marked_letters;
    c["predicted_marks"] = report.counts.predicted_marks;
    c["predicted_marked_letters"] = report.counts.predicted_marked_letters;
    c["counted_with_case"] = report.counts.counted_with_case;
    c["errors_with_case"] = report.counts.errors_with_case;
    c["counted_without_case"] = report.counts.counted_without_case;
    c["errors_without_case"] = report.counts.errors_without_case;
    return j.dump(2) + "\n";
  }

  std::vector<Column> columns;
  columns.push_back({"Coverage", cell(report.coverage)});
  if (display != CaseEndingDisplay::WithoutOnly) {
    columns.push_back({"DER w. case", cell(report.der_with_case)});
  }
  if (display != CaseEndingDisplay::WithOnly) {
    columns.push_back({"DER w.o. case", cell(report.der_without_case)});
  }
  return table(columns, format);
}

AsrReport parse_asr_report_json(std::string_view bytes) {
  ordered_json j;
  try {
    j = ordered_json::parse(bytes);
  } catch (const ordered_json::exception& e) {
    throw Error(ErrorKind::MalformedRecord, std::string("bad report json: ") + e.what());
  }
  try {
    if (j.at("kind").get<std::string>() != "asr") {
      throw Error(ErrorKind::MalformedRecord, "report kind is not 'asr'");
    }
    AsrReport report;
    report.condition.label =
        condition_label_from_name(j.at("condition").at("label").get<std::string>());
    report.condition.tag = j.at("condition").at("tag").get<std::string>();
    report.coverage_mode =
        coverage_mode_from_name(j.at("coverage_mode").get<std::string>());
    const ordered_json& m = j.at("metrics");
    report.wer_plain = m.at("wer_plain").get<double>();
    report.cer_plain = m.at("cer_plain").get<double>();
    report.wer_diac = m.at("wer_diac").get<double>();
    report.cer_diac = m.at("cer_diac").get<double>();
    report.coverage_ref = opt_from_json(m.at("coverage_ref"));
    report.coverage_hyp = opt_from_json(m.at("coverage_hyp"));
    report.precision_with_case = opt_from_json(m.at("precision_with_case"));
    report.precision_without_case = opt_from_json(m.at("precision_without_case"));
    const ordered_json& c = j.at("counts");
    AsrCounts& n = report.counts;
    n.records = c.at("records").get<std::uint64_t>();
    n.ref_words = c.at("ref_words").get<std::uint64_t>();
    n.wer_errors_plain = c.at("wer_errors_plain").get<std::uint64_t>();
    n.wer_errors_diac = c.at("wer_errors_diac").get<std::uint64_t>();
    n.ref_chars_plain = c.at("ref_chars_plain").get<std::uint64_t>();
    n.cer_errors_plain = c.at("cer_errors_plain").get<std::uint64_t>();
    n.ref_chars_diac = c.at("ref_chars_diac").get<std::uint64_t>();
    n.cer_errors_diac = c.at("cer_errors_diac").get<std::uint64_t>();
    n.ref_letters = c.at("ref_letters").get<std::uint64_t>();
    n.ref_marks = c.at("ref_marks").get<std::uint64_t>();
    n.ref_marked_letters = c.at("ref_marked_letters").get<std::uint64_t>();
    n.hyp_letters = c.at("hyp_letters").get<std::uint64_t>();
    n.hyp_marks = c.at("hyp_marks").get<std::uint64_t>();
    n.hyp_marked_letters = c.at("hyp_marked_letters").get<std::uint64_t>();
    n.matched_pairs = c.at("matched_pairs").get<std::uint64_t>();
    n.compared_with_case = c.at("compared_with_case").get<std::uint64_t>();
    n.correct_with_case = c.at("correct_with_case").get<std::uint64_t>();
    n.compared_without_case = c.at("compared_without_case").get<std::uint64_t>();
    n.correct_without_case = c.at("correct_without_case").get<std::uint64_t>();
    return report;
  } catch (const ordered_json::exception& e) {
    throw Error(ErrorKind::MalformedRecord,
                std::string("report json missing fields: ") + e.what());
  }
}

DiacritizerReport parse_diacritizer_report_json(std::string_view bytes) {
  ordered_json j;
  try {
    j = ordered_json::parse(bytes);
  } catch (const ordered_json::exception& e) {
    throw Error(ErrorKind::MalformedRecord, std::string("bad report json: ") + e.what());
  }
  try {
    if (j.at("kind").get<std::string>() != "diacritizer") {
      throw Error(ErrorKind::MalformedRecord, "report kind is not 'diacritizer'");
    }
    DiacritizerReport report;
    report.coverage_mode =
        coverage_mode_from_name(j.at("coverage_mode").get<std::string>());
    const ordered_json& m = j.at("metrics");
    report.coverage = opt_from_json(m.at("coverage"));
    report.der_with_case = opt_from_json(m.at("der_with_case"));
    report.der_without_case = opt_from_json(m.at("der_without_case"));
    const ordered_json& c = j.at("counts");
    DiacCounts& n = report.counts;
    n.records = c.at("records").get<std::uint64_t>();
    n.letters = c.at("letters").get<std::uint64_t>();
    n.gold_marks = c.at("gold_marks").get<std::uint64_t>();
    n.gold_marked_letters = c.at("gold_marked_letters").get<std::uint64_t>();
    n.predicted_marks = c.at("predicted_marks").get<std::uint64_t>();
    n.predicted_marked_letters = c.at("predicted_marked_letters").get<std::uint64_t>();
    n.counted_with_case = c.at("counted_with_case").get<std::uint64_t>();
    n.errors_with_case = c.at("errors_with_case").get<std::uint64_t>();
    n.counted_without_case = c.at("counted_without_case").get<std::uint64_t>();
    n.errors_without_case = c.at("errors_without_case").get<std::uint64_t>();
    return report;
  } catch (const ordered_json::exception& e) {
    throw Error(ErrorKind::MalformedRecord,
                std::string("report json missing fields: ") + e.what());
  }
}

}  // namespace tashkeel
