#include "tashkeel/restorer.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "tashkeel/errors.hpp"

namespace tashkeel {

namespace {

constexpr std::string_view kHeader = "tashkeel-lexicon v1";

[[noreturn]] void malformed(std::size_t line_no, const std::string& why) {
  throw Error(ErrorKind::MalformedModelFile,
              "line " + std::to_string(line_no) + ": " + why);
}

}  // namespace

LexiconModel LexiconModel::train(std::span<const SentenceForm> corpus) {
  if (corpus.empty()) {
    throw Error(ErrorKind::EmptyCorpus, "training corpus has no records");
  }
  LexiconModel model;
  std::map<std::string, std::map<std::string, std::uint64_t>> tally;
  for (const SentenceForm& sentence : corpus) {
    for (const WordForm& word : sentence.words) {
      ++tally[stripped_key(word)][render(word)];
      ++model.stats_.tokens;
    }
  }
  for (auto& [key, forms] : tally) {
    std::vector<LexiconEntry> ranked;
    ranked.reserve(forms.size());
    for (const auto& [form, count] : forms) ranked.push_back({form, count});
    std::sort(ranked.begin(), ranked.end(),
              [](const LexiconEntry& a, const LexiconEntry& b) {
                if (a.count != b.count) return a.count > b.count;
                return a.form < b.form;
              });
    model.entries_.emplace(key, std::move(ranked));
  }
  model.stats_.records = corpus.size();
  model.refresh_derived_stats();
  model.rebuild_top_forms();
  return model;
}

SentenceForm LexiconModel::restore(const SentenceForm& input) const {
  SentenceForm out;
  out.words.reserve(input.words.size());
  for (const WordForm& word : input.words) {
    const auto it = top_forms_.find(stripped_key(word));
    out.words.push_back(it == top_forms_.end() ? word : it->second);
  }
  return out;
}

std::string LexiconModel::save() const {
  std::string out(kHeader);
  out.push_back('\n');
  for (const auto& [key, forms] : entries_) {
    for (const LexiconEntry& entry : forms) {
      out += key;
      out.push_back('\t');
      out += entry.form;
      out.push_back('\t');
      out += std::to_string(entry.count);
      out.push_back('\n');
    }
  }
  return out;
}

LexiconModel LexiconModel::load(std::string_view bytes) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    std::size_t end = bytes.find('\n', pos);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }

  if (lines.empty() || lines[0] != kHeader) {
    malformed(1, "bad version tag, expected '" + std::string(kHeader) + "'");
  }

  LexiconModel model;
  for (std::size_t idx = 1; idx < lines.size(); ++idx) {
    const std::size_t line_no = idx + 1;
    const std::string_view line = lines[idx];

    const std::size_t t1 = line.find('\t');
    const std::size_t t2 = t1 == std::string_view::npos
                               ? std::string_view::npos
                               : line.find('\t', t1 + 1);
    if (t1 == std::string_view::npos || t2 == std::string_view::npos ||
        line.find('\t', t2 + 1) != std::string_view::npos) {
      malformed(line_no, "expected 3 tab-separated columns");
    }
    const std::string key(line.substr(0, t1));
    const std::string form(line.substr(t1 + 1, t2 - t1 - 1));
    const std::string_view count_text = line.substr(t2 + 1);

    std::uint64_t count = 0;
    const auto [parse_end, ec] =
        std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
    if (ec != std::errc{} || parse_end != count_text.data() + count_text.size() ||
        count == 0) {
      malformed(line_no, "bad count '" + std::string(count_text) + "'");
    }
    if (key.empty() || form.empty()) malformed(line_no, "empty column");

    // The form must strip back to its key or restoration would edit
    // base letters. Stored forms are canonicalized so save() is
    // deterministic whatever the input file looked like.
    SentenceForm parsed;
    try {
      parsed = parse(normalize(form), ParsePolicy::Strict);
    } catch (const Error& e) {
      malformed(line_no, std::string("unparseable form: ") + e.what());
    }
    if (parsed.words.size() != 1 || stripped_key(parsed.words[0]) != key) {
      malformed(line_no, "form does not strip to its key");
    }
    const std::string canonical = render(parsed.words[0]);

    auto& forms = model.entries_[key];
    for (const LexiconEntry& existing : forms) {
      if (existing.form == canonical) malformed(line_no, "duplicate entry");
    }
    forms.push_back({canonical, count});
  }

  // Rank order is canonical regardless of how the file was ordered.
  for (auto& [key, forms] : model.entries_) {
    std::sort(forms.begin(), forms.end(),
              [](const LexiconEntry& a, const LexiconEntry& b) {
                if (a.count != b.count) return a.count > b.count;
                return a.form < b.form;
              });
  }
  model.refresh_derived_stats();
  model.rebuild_top_forms();
  return model;
}

void LexiconModel::save_file(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::IoFailure, "cannot write " + path.string());
  }
  const std::string bytes = save();
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw Error(ErrorKind::IoFailure, "short write to " + path.string());
  }
}

LexiconModel LexiconModel::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::IoFailure, "cannot read " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load(buffer.str());
}

void LexiconModel::rebuild_top_forms() {
  top_forms_.clear();
  for (const auto& [key, forms] : entries_) {
    const SentenceForm parsed = parse(normalize(forms.front().form), ParsePolicy::Strict);
    top_forms_.emplace(key, parsed.words.front());
  }
}

void LexiconModel::refresh_derived_stats() {
  stats_.unique_keys = entries_.size();
  std::uint64_t ambiguous = 0;
  std::uint64_t tokens = 0;
  for (const auto& [key, forms] : entries_) {
    ambiguous += forms.size() >= 2;
    for (const LexiconEntry& entry : forms) tokens += entry.count;
  }
  if (stats_.tokens == 0) stats_.tokens = tokens;
  stats_.ambiguity_rate =
      entries_.empty() ? 0.0
                       : static_cast<double>(ambiguous) / static_cast<double>(entries_.size());
}

}  // namespace tashkeel
