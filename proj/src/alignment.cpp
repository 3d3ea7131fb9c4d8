#include "tashkeel/alignment.hpp"

#include <string>

namespace tashkeel {

std::vector<MatchedWordPair> matched_pairs(const SentenceForm& ref,
                                           const SentenceForm& hyp) {
  std::vector<std::string> ref_keys;
  ref_keys.reserve(ref.words.size());
  for (const WordForm& w : ref.words) ref_keys.push_back(stripped_key(w));
  std::vector<std::string> hyp_keys;
  hyp_keys.reserve(hyp.words.size());
  for (const WordForm& w : hyp.words) hyp_keys.push_back(stripped_key(w));

  const AlignmentPath path = align<std::string>(ref_keys, hyp_keys);
  std::vector<MatchedWordPair> pairs;
  for (const EditOp& op : path.ops) {
    if (op.kind != EditOpKind::Match) continue;
    pairs.push_back({ref.words[*op.ref_index], hyp.words[*op.hyp_index]});
  }
  return pairs;
}

}  // namespace tashkeel
