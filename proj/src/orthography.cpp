#include "tashkeel/orthography.hpp"

#include <algorithm>

#include "tashkeel/errors.hpp"
#include "tashkeel/log.hpp"
#include "tashkeel/unicode.hpp"

namespace tashkeel {

namespace {

constexpr char32_t kTatweel = U'ـ';

bool is_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == U'\v' || cp == U'\f';
}

// Canonical order inside a run: gemination first, then by codepoint.
bool mark_less(char32_t a, char32_t b) {
  const bool ga = a == static_cast<char32_t>(DiacriticMark::Shadda);
  const bool gb = b == static_cast<char32_t>(DiacriticMark::Shadda);
  if (ga != gb) return ga;
  return a < b;
}

std::string mark_name(char32_t cp) {
  switch (static_cast<DiacriticMark>(cp)) {
    case DiacriticMark::Fathatan: return "fathatan";
    case DiacriticMark::Dammatan: return "dammatan";
    case DiacriticMark::Kasratan: return "kasratan";
    case DiacriticMark::Fatha: return "fatha";
    case DiacriticMark::Damma: return "damma";
    case DiacriticMark::Kasra: return "kasra";
    case DiacriticMark::Shadda: return "shadda";
    case DiacriticMark::Sukun: return "sukun";
  }
  return "U+" + std::to_string(static_cast<std::uint32_t>(cp));
}

}  // namespace

std::string normalize(std::string_view raw) {
  std::u32string cps = utf8_decode(raw);

  std::u32string no_tatweel;
  no_tatweel.reserve(cps.size());
  for (char32_t cp : cps) {
    if (cp != kTatweel) no_tatweel.push_back(cp);
  }

  // Sort and dedup each maximal run of diacritic codepoints.
  std::u32string reordered;
  reordered.reserve(no_tatweel.size());
  std::size_t i = 0;
  while (i < no_tatweel.size()) {
    if (!is_diacritic(no_tatweel[i])) {
      reordered.push_back(no_tatweel[i++]);
      continue;
    }
    std::size_t j = i;
    while (j < no_tatweel.size() && is_diacritic(no_tatweel[j])) ++j;
    std::u32string run(no_tatweel.begin() + i, no_tatweel.begin() + j);
    std::sort(run.begin(), run.end(), mark_less);
    run.erase(std::unique(run.begin(), run.end()), run.end());
    reordered += run;
    i = j;
  }

  // Collapse whitespace runs to single spaces and trim the ends.
  std::u32string out;
  out.reserve(reordered.size());
  bool pending_space = false;
  for (char32_t cp : reordered) {
    if (is_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(U' ');
      pending_space = false;
    }
    out.push_back(cp);
  }
  return utf8_encode(out);
}

SentenceForm parse(std::string_view normalized, ParsePolicy policy) {
  const std::u32string cps = utf8_decode(normalized);
  SentenceForm sentence;
  WordForm word;
  // True while the last grapheme is an Arabic letter whose mark run is
  // still open; any other codepoint closes it.
  bool cluster_open = false;

  auto flush_word = [&]() {
    cluster_open = false;
    if (word.graphemes.empty()) return;
    sentence.words.push_back(std::move(word));
    word = WordForm{};
  };

  for (char32_t cp : cps) {
    if (is_space(cp)) {
      flush_word();
      continue;
    }
    if (is_diacritic(cp)) {
      const auto mark = static_cast<DiacriticMark>(cp);
      if (!cluster_open) {
        if (policy == ParsePolicy::Strict) {
          throw Error(ErrorKind::LeadingDiacritic,
                      mark_name(cp) + " with no preceding Arabic letter");
        }
        log_msg(LogLevel::Warn, "dropping orphan " + mark_name(cp));
        continue;
      }
      MarkCluster& cluster = word.graphemes.back().cluster;
      if (is_gemination(mark)) {
        cluster.shadda = true;  // duplicate shadda is absorbed
      } else if (!cluster.vowel.has_value() || *cluster.vowel == mark) {
        cluster.vowel = mark;
      } else if (policy == ParsePolicy::Strict) {
        throw Error(ErrorKind::IllegalCluster,
                    "letter carries both " + mark_name(static_cast<char32_t>(*cluster.vowel)) +
                        " and " + mark_name(cp));
      } else {
        log_msg(LogLevel::Warn,
                "dropping second vocalic mark " + mark_name(cp) + " on one letter");
      }
      continue;
    }
    word.graphemes.push_back(GraphemeUnit{cp, MarkCluster{}});
    cluster_open = is_arabic_letter(cp);
  }
  flush_word();
  return sentence;
}

std::string render(const WordForm& word) {
  std::string out;
  for (const GraphemeUnit& g : word.graphemes) {
    utf8_append(out, g.base);
    if (g.cluster.shadda) {
      utf8_append(out, static_cast<char32_t>(DiacriticMark::Shadda));
    }
    if (g.cluster.vowel) {
      utf8_append(out, static_cast<char32_t>(*g.cluster.vowel));
    }
  }
  return out;
}

std::string render(const SentenceForm& sentence) {
  std::string out;
  for (std::size_t i = 0; i < sentence.words.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += render(sentence.words[i]);
  }
  return out;
}

WordForm strip(const WordForm& word) {
  WordForm out = word;
  for (GraphemeUnit& g : out.graphemes) g.cluster = MarkCluster{};
  return out;
}

SentenceForm strip(const SentenceForm& sentence) {
  SentenceForm out = sentence;
  for (WordForm& w : out.words) {
    for (GraphemeUnit& g : w.graphemes) g.cluster = MarkCluster{};
  }
  return out;
}

TextCounts counts(const SentenceForm& sentence) {
  TextCounts c;
  c.words = sentence.words.size();
  for (const WordForm& w : sentence.words) {
    for (const GraphemeUnit& g : w.graphemes) {
      if (!g.arabic_letter()) continue;
      ++c.letters;
      c.marks += static_cast<std::uint64_t>(g.cluster.size());
      if (!g.cluster.empty()) ++c.marked_letters;
    }
  }
  return c;
}

CaseSplit case_split(const WordForm& word) {
  if (word.graphemes.empty()) {
    throw Error(ErrorKind::EmptyWord, "case_split on empty word");
  }
  CaseSplit split;
  split.body.reserve(word.graphemes.size() - 1);
  for (std::size_t i = 0; i + 1 < word.graphemes.size(); ++i) {
    split.body.push_back(word.graphemes[i].cluster);
  }
  split.ending = word.graphemes.back().cluster;
  return split;
}

std::string stripped_key(const WordForm& word) {
  std::string out;
  for (const GraphemeUnit& g : word.graphemes) utf8_append(out, g.base);
  return out;
}

}  // namespace tashkeel
