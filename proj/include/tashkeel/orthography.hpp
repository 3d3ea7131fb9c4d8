#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tashkeel {

// The eight marks treated as diacritics throughout the toolkit.
// Everything else in U+0600..U+06FF (dagger alif, Quranic annotation
// signs, ...) passes through as ordinary non-alphabetic codepoints.
enum class DiacriticMark : char32_t {
  Fathatan = U'ً',
  Dammatan = U'ٌ',
  Kasratan = U'ٍ',
  Fatha = U'َ',
  Damma = U'ُ',
  Kasra = U'ِ',
  Shadda = U'ّ',
  Sukun = U'ْ',
};

inline bool is_diacritic(char32_t cp) { return cp >= 0x064B && cp <= 0x0652; }

inline bool is_arabic_letter(char32_t cp) { return cp >= 0x0621 && cp <= 0x064A; }

// Shadda marks gemination; the other seven are vocalic (three tanween,
// three short vowels, sukun).
inline bool is_gemination(DiacriticMark m) { return m == DiacriticMark::Shadda; }

// The marks one letter carries, kept canonical by construction:
// at most one shadda plus at most one vocalic mark, rendered shadda first.
struct MarkCluster {
  bool shadda = false;
  std::optional<DiacriticMark> vowel;

  bool empty() const { return !shadda && !vowel.has_value(); }
  int size() const { return (shadda ? 1 : 0) + (vowel ? 1 : 0); }

  bool operator==(const MarkCluster&) const = default;
};

struct GraphemeUnit {
  char32_t base = 0;
  MarkCluster cluster;

  // Digits, Latin letters, punctuation and passthrough marks form
  // graphemes too, but never count as letters or carry clusters.
  bool arabic_letter() const { return is_arabic_letter(base); }

  bool operator==(const GraphemeUnit&) const = default;
};

struct WordForm {
  std::vector<GraphemeUnit> graphemes;

  bool operator==(const WordForm&) const = default;
};

struct SentenceForm {
  std::vector<WordForm> words;

  bool operator==(const SentenceForm&) const = default;
};

enum class ParsePolicy {
  Strict,   // reject orphan diacritics and two-vowel clusters
  Lenient,  // drop the offending mark and log it
};

// Total function: removes tatweel, collapses whitespace runs to single
// spaces, trims, sorts each diacritic run to canonical order (shadda
// first, then by codepoint) and drops exact duplicate marks. All other
// codepoints pass through unchanged. Idempotent.
std::string normalize(std::string_view raw);

// Whitespace-tokenizes normalized text into words of grapheme units.
// A diacritic belongs to the nearest preceding Arabic letter; anything
// else in front of it makes it an orphan (strict: Error, lenient: drop).
SentenceForm parse(std::string_view normalized, ParsePolicy policy = ParsePolicy::Strict);

// Inverse of parse on normalized text; words joined by single spaces.
std::string render(const WordForm& word);
std::string render(const SentenceForm& sentence);

// Empties every cluster; bases and word boundaries are untouched.
WordForm strip(const WordForm& word);
SentenceForm strip(const SentenceForm& sentence);

struct TextCounts {
  std::uint64_t letters = 0;         // Arabic-letter graphemes
  std::uint64_t marks = 0;           // shadda+vowel on one letter counts as 2
  std::uint64_t marked_letters = 0;  // letters with a nonempty cluster
  std::uint64_t words = 0;
};

TextCounts counts(const SentenceForm& sentence);

// Splits a word's clusters into body (all but last grapheme) and the
// case-ending position (last grapheme). Throws Error(EmptyWord).
struct CaseSplit {
  std::vector<MarkCluster> body;
  MarkCluster ending;
};

CaseSplit case_split(const WordForm& word);

// render(strip(word)) without the intermediate copy; used as the
// alignment and lexicon key.
std::string stripped_key(const WordForm& word);

}  // namespace tashkeel
