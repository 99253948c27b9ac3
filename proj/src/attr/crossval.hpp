#pragma once

#include <cstdint>

#include "attr/profile.hpp"
#include "text/corpus.hpp"
#include "text/lexicon.hpp"

namespace wanattr {

struct CrossValConfig {
  std::size_t pieces = 10;   // N: per-author split count
  std::size_t n_min = 20;
  std::size_t n_max = 80;
  std::size_t rounds = 10;   // M: cross-validation rounds
  std::uint64_t seed = 0;
};

/// Repeated leave-one-out cross-validation over the candidate corpus: per
/// round each author's concatenated texts are split into N sentence-aligned
/// pieces, a profile is built from a random N-1 subset, and the held-out
/// piece is attributed for every vocabulary size n in [n_min, n_max].
/// Returns the n with the highest total accuracy, ties to the smallest n.
std::size_t adaptive_vocab_size(const CorpusIndex& corpus, const FunctionWordLexicon& lexicon,
                                const CrossValConfig& cfg, const WanParams& params);

/// Split a text into `pieces` sentence-aligned runs of near-equal word
/// counts. Throws when a piece would come out empty.
std::vector<TokenizedText> split_equal_pieces(const TokenizedText& text, std::size_t pieces,
                                              const std::string& owner);

}  // namespace wanattr
