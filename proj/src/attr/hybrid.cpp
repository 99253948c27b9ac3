#include "attr/hybrid.hpp"

#include <algorithm>

#include "text/sampling.hpp"

namespace wanattr {

AuthorProfile build_hybrid_profile(const std::string& author_a,
                                   const std::vector<TokenizedText>& texts_a,
                                   const std::string& author_b,
                                   const std::vector<TokenizedText>& texts_b,
                                   std::size_t words_each, const std::vector<std::string>& vocab,
                                   const WanParams& params, Rng& rng, std::size_t pieces) {
  std::vector<TokenizedText> excerpts = sample_profile_excerpts(texts_a, words_each, pieces, rng, author_a);
  std::vector<TokenizedText> half_b = sample_profile_excerpts(texts_b, words_each, pieces, rng, author_b);
  excerpts.insert(excerpts.end(), std::make_move_iterator(half_b.begin()),
                  std::make_move_iterator(half_b.end()));
  const std::string label =
      author_a <= author_b ? author_a + "+" + author_b : author_b + "+" + author_a;
  return build_profile(label, excerpts, vocab, params);
}

}  // namespace wanattr
