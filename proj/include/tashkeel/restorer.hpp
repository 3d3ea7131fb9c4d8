#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tashkeel/orthography.hpp"

namespace tashkeel {

struct LexiconEntry {
  std::string form;  // diacritized form, canonical render
  std::uint64_t count = 0;

  bool operator==(const LexiconEntry&) const = default;
};

struct TrainingStats {
  std::uint64_t records = 0;     // sentences seen at train time (0 after load)
  std::uint64_t tokens = 0;      // word occurrences tallied
  std::uint64_t unique_keys = 0;
  double ambiguity_rate = 0;     // keys with >= 2 observed forms / keys
};

// Majority-form unigram lexicon: every stripped word form maps to the
// diacritized forms observed for it, ranked by count then codepoint
// order. Restoration replaces a word by its key's top form and never
// touches base letters.
class LexiconModel {
 public:
  LexiconModel() = default;

  static LexiconModel train(std::span<const SentenceForm> corpus);

  // Unknown words come back unchanged; strip(restore(x)) == strip(x).
  SentenceForm restore(const SentenceForm& input) const;

  // File format, bit-exact:
  //   tashkeel-lexicon v1
  //   <stripped>\t<diacritized>\t<count>
  // sorted by stripped key, then rank. load(save(m)) == m.
  std::string save() const;
  static LexiconModel load(std::string_view bytes);

  void save_file(const std::filesystem::path& path) const;
  static LexiconModel load_file(const std::filesystem::path& path);

  const std::map<std::string, std::vector<LexiconEntry>>& entries() const {
    return entries_;
  }
  const TrainingStats& stats() const { return stats_; }
  bool empty() const { return entries_.empty(); }

  // Model identity is its entries; stats are derived bookkeeping.
  bool operator==(const LexiconModel& other) const {
    return entries_ == other.entries_;
  }

 private:
  void rebuild_top_forms();
  void refresh_derived_stats();

  std::map<std::string, std::vector<LexiconEntry>> entries_;
  std::map<std::string, WordForm> top_forms_;
  TrainingStats stats_;
};

}  // namespace tashkeel
