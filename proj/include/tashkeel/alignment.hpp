#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tashkeel/orthography.hpp"

namespace tashkeel {

enum class EditOpKind { Match, Substitute, Insert, Delete };

struct EditOp {
  EditOpKind kind = EditOpKind::Match;
  std::optional<std::size_t> ref_index;  // absent for Insert
  std::optional<std::size_t> hyp_index;  // absent for Delete

  bool operator==(const EditOp&) const = default;
};

struct AlignmentPath {
  std::vector<EditOp> ops;
  std::uint64_t cost = 0;
};

// Minimum edit distance under unit costs, two-row memory. Used where
// only the cost matters (WER/CER tallies).
template <typename Token, typename Eq = std::equal_to<>>
std::uint64_t edit_cost(std::span<const Token> ref, std::span<const Token> hyp,
                        Eq equal = {}) {
  const std::size_t m = ref.size();
  const std::size_t n = hyp.size();
  std::vector<std::uint32_t> prev(n + 1);
  std::vector<std::uint32_t> curr(n + 1);
  for (std::size_t j = 0; j <= n; ++j) prev[j] = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= m; ++i) {
    curr[0] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j <= n; ++j) {
      const std::uint32_t sub = prev[j - 1] + (equal(ref[i - 1], hyp[j - 1]) ? 0 : 1);
      const std::uint32_t del = prev[j] + 1;
      const std::uint32_t ins = curr[j - 1] + 1;
      curr[j] = std::min(sub, std::min(del, ins));
    }
    std::swap(prev, curr);
  }
  return prev[n];
}

// Full DP with traceback. Among minimum-cost paths the result is the
// unique one obtained by preferring Match > Substitute > Delete > Insert
// at every cell, walking back from the corner.
template <typename Token, typename Eq = std::equal_to<>>
AlignmentPath align(std::span<const Token> ref, std::span<const Token> hyp,
                    Eq equal = {}) {
  const std::size_t m = ref.size();
  const std::size_t n = hyp.size();
  const std::size_t stride = n + 1;
  std::vector<std::uint32_t> d((m + 1) * stride);
  for (std::size_t i = 0; i <= m; ++i) d[i * stride] = static_cast<std::uint32_t>(i);
  for (std::size_t j = 0; j <= n; ++j) d[j] = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const std::uint32_t sub =
          d[(i - 1) * stride + (j - 1)] + (equal(ref[i - 1], hyp[j - 1]) ? 0 : 1);
      const std::uint32_t del = d[(i - 1) * stride + j] + 1;
      const std::uint32_t ins = d[i * stride + (j - 1)] + 1;
      d[i * stride + j] = std::min(sub, std::min(del, ins));
    }
  }

  AlignmentPath path;
  path.cost = d[m * stride + n];
  path.ops.reserve(std::max(m, n));
  std::size_t i = m;
  std::size_t j = n;
  while (i > 0 || j > 0) {
    const std::uint32_t here = d[i * stride + j];
    if (i > 0 && j > 0 && equal(ref[i - 1], hyp[j - 1]) &&
        here == d[(i - 1) * stride + (j - 1)]) {
      path.ops.push_back({EditOpKind::Match, i - 1, j - 1});
      --i;
      --j;
    } else if (i > 0 && j > 0 && here == d[(i - 1) * stride + (j - 1)] + 1 &&
               !equal(ref[i - 1], hyp[j - 1])) {
      path.ops.push_back({EditOpKind::Substitute, i - 1, j - 1});
      --i;
      --j;
    } else if (i > 0 && here == d[(i - 1) * stride + j] + 1) {
      path.ops.push_back({EditOpKind::Delete, i - 1, std::nullopt});
      --i;
    } else {
      path.ops.push_back({EditOpKind::Insert, std::nullopt, j - 1});
      --j;
    }
  }
  std::reverse(path.ops.begin(), path.ops.end());
  return path;
}

// Aligned (reference, hypothesis) words whose stripped forms are equal;
// the carried words keep their original diacritics.
struct MatchedWordPair {
  WordForm ref_word;
  WordForm hyp_word;
};

// Word alignment runs on the stripped forms, so words that differ only
// in diacritics still pair up. Every Match op yields one pair.
std::vector<MatchedWordPair> matched_pairs(const SentenceForm& ref,
                                           const SentenceForm& hyp);

}  // namespace tashkeel
