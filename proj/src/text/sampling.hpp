#pragma once

#include <string>
#include <vector>

#include "core/rng.hpp"
#include "text/tokenize.hpp"

namespace wanattr {

/// A contiguous sentence-aligned run starting at a random sentence, greedily
/// filled up to at most `length_words` words. The start is drawn uniformly
/// among sentence positions with enough following words.
TokenizedText sample_contiguous_excerpt(const TokenizedText& text, std::size_t length_words,
                                        Rng& rng);

/// `pieces` sentence-aligned excerpts of floor(profile_words / pieces) words
/// each, drawn from random start positions in randomly chosen texts.
/// Excerpts may overlap. `author_id` is used only for error messages.
std::vector<TokenizedText> sample_profile_excerpts(const std::vector<TokenizedText>& texts,
                                                   std::size_t profile_words, std::size_t pieces,
                                                   Rng& rng, const std::string& author_id);

}  // namespace wanattr
